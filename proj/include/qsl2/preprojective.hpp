#pragma once

/**
 * @file preprojective.hpp
 * @brief Preprojective algebras of a modulated graph: relation construction
 *        from the dual pairing, degree-by-degree graded dimensions, the
 *        (1 - At + t^2)^{-1} recurrence, flatness experiments, and the
 *        quadratic dual with the Euler convolution check.
 *
 * Graded components are computed by dense exact linear algebra on path
 * bases: the degree-n slice of the ideal is spanned by prefix (x) relation
 * (x) suffix with both-sided padding, and the block dimension is the path
 * count minus the rank of that span.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "modulated_graph.hpp"
#include "paths.hpp"
#include "random_forms.hpp"

namespace qsl2 {

/// For each vertex i, the canonical element of (T^2 V)_{ii} determined by
/// the form inverses: rho_i = sum_j sum_{s,t} (E_ji^{-1})_{st}
/// e^{ij}_s (x) e^{ji}_t. Stored over the length-2 path basis.
template <class K>
class RelationSet {
  public:
    explicit RelationSet(const ModulatedGraph<K>& g) {
        if (!g.symmetric_dims())
            throw AsymmetricDims("relation elements need symmetric dimensions");
        if (!g.forms_complete()) throw DegenerateForm("relation elements need forms");
        const std::size_t nv = g.vertex_count();
        per_vertex_.resize(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            for (std::size_t j = 0; j < nv; ++j) {
                if (g.dim(i, j) == 0) continue;
                const Matrix<K> inv = g.form(j, i).inverse();
                for (std::size_t s = 0; s < inv.rows(); ++s)
                    for (std::size_t t = 0; t < inv.cols(); ++t) {
                        if (is_zero_value(inv(s, t))) continue;
                        Path p{{i, j, i}, {static_cast<unsigned>(s), static_cast<unsigned>(t)}};
                        per_vertex_[i].emplace(std::move(p), inv(s, t));
                    }
            }
        }
        verify_contraction(g);
    }

    const std::map<Path, K>& at_vertex(std::size_t i) const { return per_vertex_[i]; }
    std::size_t vertex_count() const { return per_vertex_.size(); }

  private:
    std::vector<std::map<Path, K>> per_vertex_;

    /// (E (x) id) o (id (x) E*) = id_V, evaluated through the stored
    /// coefficients: sum_s (E_ki)_{us} w^{(ik)}_{st} must be delta_{ut}.
    void verify_contraction(const ModulatedGraph<K>& g) const {
        const std::size_t nv = g.vertex_count();
        for (std::size_t k = 0; k < nv; ++k)
            for (std::size_t i = 0; i < nv; ++i) {
                const unsigned d = g.dim(k, i);
                if (d == 0) continue;
                const Matrix<K>& e = g.form(k, i);
                for (unsigned u = 0; u < d; ++u)
                    for (unsigned t2 = 0; t2 < d; ++t2) {
                        K acc = g.field_sample().zero();
                        for (unsigned s = 0; s < g.dim(i, k); ++s) {
                            Path p{{i, k, i}, {s, t2}};
                            auto it = per_vertex_[i].find(p);
                            if (it == per_vertex_[i].end()) continue;
                            acc += e(u, s) * it->second;
                        }
                        const bool want_one = u == t2;
                        if (want_one ? !(acc == g.field_sample().one()) : !acc.is_zero())
                            throw std::logic_error(
                                "relation element fails the contraction identity");
                    }
            }
    }
};

/// Degree-indexed I x I matrices of graded dimensions.
struct GradedTruncation {
    std::vector<Matrix<Integer>> dims;  // index = degree

    const Matrix<Integer>& at(std::size_t degree) const { return dims.at(degree); }
    std::size_t max_degree() const { return dims.size() - 1; }

    bool operator==(const GradedTruncation& o) const { return dims == o.dims; }
};

namespace detail {

/// Quadratic relation spaces per block: spanning vectors over the length-2
/// path basis of block (u, w).
template <class K>
using RelationSpaces = std::map<BlockKey, std::vector<std::map<Path, K>>>;

/// dim T^n/(ideal) per block, where the ideal is generated in degree 2 by
/// the given relation spaces.
template <class K>
GradedTruncation graded_quotient_dims(const std::vector<std::vector<unsigned>>& dims,
                                      const RelationSpaces<K>& relations, unsigned max_degree,
                                      std::size_t budget) {
    const std::size_t nv = dims.size();
    const PathTable table(dims, max_degree, budget);
    GradedTruncation out;
    for (unsigned n = 0; n <= max_degree; ++n) {
        Matrix<Integer> block_dims(nv, nv);
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nv; ++j) {
                const auto& paths = table.layer(n).paths(i, j);
                if (paths.empty()) continue;
                if (n < 2) {
                    block_dims(i, j) = Integer(static_cast<long>(paths.size()));
                    continue;
                }
                // ideal slice: prefix (x) relation (x) suffix
                std::vector<std::vector<K>> rows;
                for (unsigned a = 0; a + 2 <= n; ++a) {
                    const unsigned b = n - 2 - a;
                    for (const auto& [key, spanning] : relations) {
                        const auto& prefixes = table.layer(a).paths(i, key.first);
                        const auto& suffixes = table.layer(b).paths(key.second, j);
                        for (const Path& pre : prefixes)
                            for (const Path& suf : suffixes)
                                for (const auto& rel : spanning) {
                                    std::vector<K> row(paths.size());
                                    for (const auto& [mid, coeff] : rel) {
                                        Path whole;
                                        whole.vertices = pre.vertices;
                                        whole.vertices.insert(whole.vertices.end(),
                                                              mid.vertices.begin() + 1,
                                                              mid.vertices.end() - 1);
                                        whole.vertices.insert(whole.vertices.end(),
                                                              suf.vertices.begin(),
                                                              suf.vertices.end());
                                        whole.arrows = pre.arrows;
                                        whole.arrows.insert(whole.arrows.end(),
                                                            mid.arrows.begin(),
                                                            mid.arrows.end());
                                        whole.arrows.insert(whole.arrows.end(),
                                                            suf.arrows.begin(),
                                                            suf.arrows.end());
                                        const long idx = table.layer(n).index_of(whole);
                                        row[static_cast<std::size_t>(idx)] += coeff;
                                    }
                                    rows.push_back(std::move(row));
                                }
                    }
                }
                std::size_t rank = 0;
                if (!rows.empty()) {
                    Matrix<K> m(rows.size(), paths.size());
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        for (std::size_t c = 0; c < paths.size(); ++c)
                            m(r, c) = std::move(rows[r][c]);
                    rank = m.rank();
                }
                block_dims(i, j) = Integer(static_cast<long>(paths.size() - rank));
            }
        out.dims.push_back(std::move(block_dims));
    }
    return out;
}

}  // namespace detail

/// The canonical relation element (one generator per vertex).
template <class K>
RelationSet<K> relation_element(const ModulatedGraph<K>& g) {
    return RelationSet<K>(g);
}

/// dim e_i P_n e_j for n = 0..max_degree.
template <class K>
GradedTruncation graded_dims(const ModulatedGraph<K>& g, unsigned max_degree,
                             std::size_t budget = 500000) {
    const RelationSet<K> rel = relation_element(g);
    detail::RelationSpaces<K> spaces;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (!rel.at_vertex(i).empty())
            spaces[{i, i}].push_back(rel.at_vertex(i));
    return detail::graded_quotient_dims(g.dims(), spaces, max_degree, budget);
}

/// Coefficients of (1 - At + t^2)^{-1}: H_0 = I, H_1 = A,
/// H_n = A H_{n-1} - H_{n-2}.
inline std::vector<Matrix<Integer>> expected_series(const Matrix<Integer>& a,
                                                    unsigned max_degree) {
    std::vector<Matrix<Integer>> h;
    h.push_back(Matrix<Integer>::identity(a.rows()));
    if (max_degree >= 1) h.push_back(a);
    for (unsigned n = 2; n <= max_degree; ++n)
        h.push_back(a * h[n - 1] - h[n - 2]);
    return h;
}

template <class K>
struct FlatnessReport {
    GradedTruncation dims;
    bool expected_comparable = false;  // connected and not ADET
    std::vector<Matrix<Integer>> expected;
    std::optional<unsigned> first_expected_mismatch;
    // per redraw: seed used and first degree where dims differ (if any)
    std::vector<std::pair<std::uint64_t, std::optional<unsigned>>> redraws;

    bool consistent() const {
        if (expected_comparable && first_expected_mismatch) return false;
        for (const auto& [seed, mism] : redraws)
            if (mism) return false;
        return true;
    }
};

/// Compare graded dimensions against the recurrence (for connected non-ADET
/// graphs) and against independent random form redraws over the same field.
template <class K>
FlatnessReport<K> flatness_check(const ModulatedGraph<K>& g, unsigned max_degree,
                                 std::uint64_t seed = 1, unsigned trials = 2,
                                 std::size_t budget = 500000) {
    FlatnessReport<K> report;
    report.dims = graded_dims(g, max_degree, budget);

    const auto comps = g.components();
    bool adet = false;
    for (const auto& c : comps) adet = adet || g.classify_component(c).is_adet();
    report.expected_comparable = comps.size() == 1 && !adet;
    if (report.expected_comparable) {
        report.expected = expected_series(g.adjacency(), max_degree);
        for (unsigned n = 0; n <= max_degree; ++n)
            if (!(report.expected[n] == report.dims.at(n))) {
                report.first_expected_mismatch = n;
                break;
            }
    }

    for (unsigned t = 0; t < trials; ++t) {
        const std::uint64_t redraw_seed = seed + t;
        std::mt19937_64 rng(redraw_seed);
        const auto redraw =
            with_random_forms(g.vertex_names(), g.dims(), g.field_sample(), rng);
        const GradedTruncation redraw_dims = graded_dims(redraw, max_degree, budget);
        std::optional<unsigned> mismatch;
        for (unsigned n = 0; n <= max_degree; ++n)
            if (!(redraw_dims.at(n) == report.dims.at(n))) {
                mismatch = n;
                break;
            }
        report.redraws.emplace_back(redraw_seed, mismatch);
    }
    return report;
}

struct QuadraticDualReport {
    GradedTruncation dual_dims;
    GradedTruncation primal_dims;
    bool euler_identity_holds = true;          // sum_k (-1)^k H!_k H_{n-k} = delta_{n,0} I
    std::optional<unsigned> first_euler_failure;
};

/// Dimensions of T(V*)/(R^perp) and the Euler convolution check.
/// R^perp is the annihilator of the relation span under the same-index
/// pairing of degree-2 path bases: full on off-diagonal blocks, a
/// codimension-1 hyperplane on each diagonal block with a relation.
template <class K>
QuadraticDualReport quadratic_dual_dims(const ModulatedGraph<K>& g, unsigned max_degree,
                                        std::size_t budget = 500000) {
    const RelationSet<K> rel = relation_element(g);
    const K sample = g.field_sample();
    const std::size_t nv = g.vertex_count();
    const PathTable table(g.dims(), 2, budget);

    detail::RelationSpaces<K> dual_spaces;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            const auto& paths = table.layer(2).paths(i, j);
            if (paths.empty()) continue;
            if (i != j || rel.at_vertex(i).empty()) {
                // annihilator of 0: the whole block
                for (std::size_t p = 0; p < paths.size(); ++p) {
                    std::map<Path, K> v;
                    v.emplace(paths[p], sample.one());
                    dual_spaces[{i, j}].push_back(std::move(v));
                }
                continue;
            }
            // hyperplane orthogonal to rho_i
            Matrix<K> row(1, paths.size());
            for (std::size_t p = 0; p < paths.size(); ++p) {
                auto it = rel.at_vertex(i).find(paths[p]);
                row(0, p) = it == rel.at_vertex(i).end() ? sample.zero() : it->second;
            }
            for (const auto& basis_vec : row.nullspace()) {
                std::map<Path, K> v;
                for (std::size_t p = 0; p < paths.size(); ++p)
                    if (!is_zero_value(basis_vec[p])) v.emplace(paths[p], basis_vec[p]);
                dual_spaces[{i, j}].push_back(std::move(v));
            }
        }

    QuadraticDualReport report;
    report.dual_dims = detail::graded_quotient_dims(g.dims(), dual_spaces, max_degree, budget);
    report.primal_dims = graded_dims(g, max_degree, budget);

    for (unsigned n = 0; n <= max_degree; ++n) {
        Matrix<Integer> acc(nv, nv);
        for (unsigned k = 0; k <= n; ++k) {
            const Matrix<Integer> term = report.dual_dims.at(k) * report.primal_dims.at(n - k);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        const bool ok = n == 0 ? acc == Matrix<Integer>::identity(nv) : acc.is_zero();
        if (!ok) {
            report.euler_identity_holds = false;
            report.first_euler_failure = n;
            break;
        }
    }
    return report;
}

}  // namespace qsl2
