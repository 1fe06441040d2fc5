#pragma once

/**
 * @file modulated_graph.hpp
 * @brief Modulated graphs: a finite vertex set, spaces V_ij given by their
 *        dimensions, and nondegenerate pairing matrices E_ij between V_ij
 *        and V_ji.
 *
 * Connected components are classified against the ADET families twice:
 * a combinatorial pattern match and the Chebyshev vanishing criterion
 * P_{h-1}(A) = 0. Disagreement between the two is a hard error.
 *
 * Conventions pinned here:
 *  - adjacency has A_ij = dim V_ij uniformly, so a loop space V_ii
 *    contributes dim V_ii to the diagonal;
 *  - T(n) is the tadpole: a path of n vertices with a single loop of
 *    multiplicity 1 at one end (T(1) is one vertex with one loop).
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace qsl2 {

enum class GraphFamily { A, D, E6, E7, E8, T, NonADET };

struct GraphType {
    GraphFamily family = GraphFamily::NonADET;
    unsigned n = 0;  // rank for the A/D/T families

    bool is_adet() const { return family != GraphFamily::NonADET; }

    bool operator==(const GraphType& o) const {
        if (family != o.family) return false;
        switch (family) {
            case GraphFamily::A:
            case GraphFamily::D:
            case GraphFamily::T: return n == o.n;
            default: return true;
        }
    }
    bool operator!=(const GraphType& o) const { return !(*this == o); }

    std::string str() const {
        switch (family) {
            case GraphFamily::A: return "A(" + std::to_string(n) + ")";
            case GraphFamily::D: return "D(" + std::to_string(n) + ")";
            case GraphFamily::E6: return "E6";
            case GraphFamily::E7: return "E7";
            case GraphFamily::E8: return "E8";
            case GraphFamily::T: return "T(" + std::to_string(n) + ")";
            case GraphFamily::NonADET: return "NonADET";
        }
        return "?";
    }
};

/// Coxeter number; certified elsewhere by the vanishing P_{h-1}(A) = 0.
inline unsigned coxeter_number(const GraphType& t) {
    switch (t.family) {
        case GraphFamily::A: return t.n + 1;
        case GraphFamily::D: return 2 * t.n - 2;
        case GraphFamily::E6: return 12;
        case GraphFamily::E7: return 18;
        case GraphFamily::E8: return 30;
        case GraphFamily::T: return 2 * t.n + 1;
        case GraphFamily::NonADET: throw NotADET();
    }
    throw NotADET();
}

template <class K>
class ModulatedGraph {
  public:
    using FormMap = std::map<std::pair<std::size_t, std::size_t>, Matrix<K>>;

    ModulatedGraph(std::vector<std::string> vertex_names,
                   std::vector<std::vector<unsigned>> dims,
                   FormMap forms = {},
                   K field_sample = K{})
        : names_(std::move(vertex_names)),
          dims_(std::move(dims)),
          forms_(std::move(forms)),
          sample_(std::move(field_sample)) {
        const std::size_t n = names_.size();
        if (dims_.size() != n)
            throw std::invalid_argument("dims table does not match the vertex count");
        for (const auto& row : dims_)
            if (row.size() != n)
                throw std::invalid_argument("dims table is not square");
        validate_forms();
        for (const auto& [key, form] : forms_) {
            (void)key;
            for (std::size_t r = 0; r < form.rows(); ++r)
                for (std::size_t c = 0; c < form.cols(); ++c)
                    if (!is_zero_value(form(r, c))) { sample_ = form(r, c); return; }
        }
    }

    static ModulatedGraph bare(std::vector<std::string> vertex_names,
                               std::vector<std::vector<unsigned>> dims) {
        return ModulatedGraph(std::move(vertex_names), std::move(dims));
    }

    std::size_t vertex_count() const { return names_.size(); }
    const std::string& vertex_name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    unsigned dim(std::size_t i, std::size_t j) const { return dims_[i][j]; }
    const std::vector<std::vector<unsigned>>& dims() const { return dims_; }
    bool has_forms() const { return !forms_.empty(); }

    bool has_edges() const {
        for (const auto& row : dims_)
            for (unsigned d : row)
                if (d > 0) return true;
        return false;
    }

    /// Every dim > 0 pair carries a validated form. Vacuously true for an
    /// edgeless graph; false exactly for bare graphs with edges.
    bool forms_complete() const { return !forms_.empty() || !has_edges(); }
    const FormMap& forms() const { return forms_; }
    const K& field_sample() const { return sample_; }

    const Matrix<K>& form(std::size_t i, std::size_t j) const {
        auto it = forms_.find({i, j});
        if (it == forms_.end())
            throw std::invalid_argument("no form stored for the requested pair");
        return it->second;
    }

    bool symmetric_dims() const {
        for (std::size_t i = 0; i < vertex_count(); ++i)
            for (std::size_t j = i + 1; j < vertex_count(); ++j)
                if (dims_[i][j] != dims_[j][i]) return false;
        return true;
    }

    /// A_ij = dim V_ij, loops included on the diagonal.
    Matrix<Integer> adjacency() const {
        require_symmetric();
        const std::size_t n = vertex_count();
        Matrix<Integer> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Integer(dims_[i][j]);
        return a;
    }

    /// Connected components (an edge exists iff dim V_ij > 0), each sorted.
    std::vector<std::vector<std::size_t>> components() const {
        const std::size_t n = vertex_count();
        std::vector<bool> seen(n, false);
        std::vector<std::vector<std::size_t>> comps;
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<std::size_t> comp, stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                const std::size_t v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (std::size_t w = 0; w < n; ++w) {
                    if (seen[w] || (dims_[v][w] == 0 && dims_[w][v] == 0)) continue;
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    /// Classify one connected component; pattern match cross-checked by the
    /// Chebyshev criterion.
    GraphType classify_component(const std::vector<std::size_t>& comp) const {
        require_symmetric();
        const std::size_t m = comp.size();
        Matrix<Integer> a(m, m);
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) a(x, y) = Integer(dims_[comp[x]][comp[y]]);

        const GraphType t = pattern_match(a);
        cross_check(a, t);
        return t;
    }

    bool is_adet_free() const {
        for (const auto& comp : components())
            if (classify_component(comp).is_adet()) return false;
        return true;
    }

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<unsigned>> dims_;
    FormMap forms_;
    K sample_;

    void require_symmetric() const {
        for (std::size_t i = 0; i < vertex_count(); ++i)
            for (std::size_t j = i + 1; j < vertex_count(); ++j)
                if (dims_[i][j] != dims_[j][i])
                    throw AsymmetricDims("dim V_ij != dim V_ji for vertices " + names_[i] +
                                         ", " + names_[j]);
    }

    void validate_forms() {
        if (forms_.empty()) return;
        const std::size_t n = vertex_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const bool expect = dims_[i][j] > 0;
                const bool have = forms_.count({i, j}) > 0;
                if (expect && !have)
                    throw std::invalid_argument("missing form for an edge pair (" + names_[i] +
                                                ", " + names_[j] + ")");
                if (!expect && have)
                    throw std::invalid_argument("form supplied for a dimension-zero pair (" +
                                                names_[i] + ", " + names_[j] + ")");
                if (!have) continue;
                const Matrix<K>& e = forms_.at({i, j});
                if (e.rows() != dims_[i][j] || e.cols() != dims_[j][i])
                    throw std::invalid_argument("form E_ij has the wrong shape at (" + names_[i] +
                                                ", " + names_[j] + ")");
                if (!e.square() || e.rank() != e.rows())
                    throw DegenerateForm("form E_ij is degenerate at (" + names_[i] + ", " +
                                         names_[j] + ")");
            }
    }

    static GraphType pattern_match(const Matrix<Integer>& a) {
        const std::size_t m = a.rows();
        std::size_t loop_vertices = 0, loop_vertex = 0;
        bool multi_loop = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (a(i, i) == 0) continue;
            ++loop_vertices;
            loop_vertex = i;
            if (a(i, i) != 1) multi_loop = true;
        }

        // simple-graph data ignoring loops
        bool multi_edge = false;
        std::size_t edges = 0;
        std::vector<std::size_t> degree(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                if (a(i, j) == 0) continue;
                if (a(i, j) != 1) multi_edge = true;
                ++edges;
                ++degree[i];
                ++degree[j];
            }

        const GraphType non_adet{GraphFamily::NonADET, 0};
        if (multi_loop || multi_edge || loop_vertices > 1) return non_adet;

        if (loop_vertices == 1) {
            // tadpole candidate: loopless part must be a path with the loop
            // at one end
            if (edges != m - 1 && m != 1) return non_adet;
            if (m == 1) return GraphType{GraphFamily::T, 1};
            if (*std::max_element(degree.begin(), degree.end()) > 2) return non_adet;
            if (edges != m - 1) return non_adet;
            // a tree with max degree 2 is a path; loop must sit at an end
            if (degree[loop_vertex] != 1) return non_adet;
            return GraphType{GraphFamily::T, static_cast<unsigned>(m)};
        }

        if (edges != m - 1) return non_adet;  // not a tree (cycle or disconnected)
        const std::size_t max_deg = m == 1 ? 0 : *std::max_element(degree.begin(), degree.end());
        if (max_deg <= 2) return GraphType{GraphFamily::A, static_cast<unsigned>(m)};
        if (max_deg > 3) return non_adet;
        std::size_t branch = m, branch_count = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (degree[i] == 3) { branch = i; ++branch_count; }
        if (branch_count != 1) return non_adet;

        // arm lengths from the branch vertex
        std::vector<std::size_t> arms;
        for (std::size_t s = 0; s < m; ++s) {
            if (a(branch, s) == 0) continue;
            std::size_t len = 1, prev = branch, cur = s;
            while (true) {
                std::size_t next = m;
                for (std::size_t w = 0; w < m; ++w)
                    if (w != prev && a(cur, w) != 0) { next = w; break; }
                if (next == m) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) return non_adet;
        const auto [p, q, r] = std::tuple{arms[0], arms[1], arms[2]};
        if (p == 1 && q == 1) return GraphType{GraphFamily::D, static_cast<unsigned>(m)};
        if (p == 1 && q == 2 && r == 2) return GraphType{GraphFamily::E6, 0};
        if (p == 1 && q == 2 && r == 3) return GraphType{GraphFamily::E7, 0};
        if (p == 1 && q == 2 && r == 4) return GraphType{GraphFamily::E8, 0};
        return non_adet;
    }

    /// Pattern match and spectral criterion must agree (Smith's theorem:
    /// connected graphs with all eigenvalues 2cos(pi m/h) are exactly ADET).
    static void cross_check(const Matrix<Integer>& a, const GraphType& t) {
        const std::size_t m = a.rows();
        if (t.is_adet()) {
            if (!cheb_p_annihilates(a, coxeter_number(t) - 1))
                throw std::logic_error("ADET pattern match contradicts the Chebyshev criterion");
            return;
        }
        std::vector<GraphType> candidates{{GraphFamily::A, static_cast<unsigned>(m)},
                                          {GraphFamily::T, static_cast<unsigned>(m)}};
        if (m >= 4) candidates.push_back({GraphFamily::D, static_cast<unsigned>(m)});
        if (m == 6) candidates.push_back({GraphFamily::E6, 0});
        if (m == 7) candidates.push_back({GraphFamily::E7, 0});
        if (m == 8) candidates.push_back({GraphFamily::E8, 0});
        for (const auto& cand : candidates)
            if (cheb_p_annihilates(a, coxeter_number(cand) - 1))
                throw std::logic_error("non-ADET verdict contradicts the Chebyshev criterion");
    }
};

}  // namespace qsl2
