#pragma once

/**
 * @file hopf.hpp
 * @brief The universal Hopf algebras H(E): generators a_{ab} with the matrix
 *        relations E^{-1}a^t E a = a E^{-1}a^t E = I, the antipode and
 *        comodule-map identities as exact ideal-membership tests, filtered
 *        dimensions, and the quantum SL(2) specialization.
 *
 * The relations are inhomogeneous quadratic (degree-0 part -I), so ideal
 * slices are computed in the filtered word space: the span of
 * {w1 * rel * w2 : |w1| + |w2| <= N - 2} inside words of length <= N.
 */

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace qsl2 {

/// A word in the generators a_{ab}; letter = a*n + b.
using Word = std::vector<unsigned>;

/// Inhomogeneous element of degree <= 2 of the free algebra on n^2 letters.
template <class K>
struct QuadraticElement {
    std::map<Word, K> terms;  // words of length 0, 1 or 2

    void add(Word w, const K& c) {
        if (is_zero_value(c)) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (is_zero_value(it->second)) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
};

template <class K>
struct HopfPresentation {
    std::size_t n = 0;                           // dim V
    Matrix<K> form;                              // E, nondegenerate
    std::vector<QuadraticElement<K>> relations;  // 2 n^2 entries
};

/// Expand both matrix relations into 2n^2 scalar quadratic relations.
template <class K>
HopfPresentation<K> h_relations(const Matrix<K>& e) {
    if (!e.square()) throw SingularMatrix();
    const std::size_t n = e.rows();
    Matrix<K> einv;
    try {
        einv = e.inverse();
    } catch (const SingularMatrix&) {
        throw;
    }
    const K one = e.sample().one();
    auto letter = [n](std::size_t a, std::size_t b) {
        return static_cast<unsigned>(a * n + b);
    };

    HopfPresentation<K> h;
    h.n = n;
    h.form = e;
    // E^{-1} a^t E a - I:   (i,j) entry: sum_{k,l,m} Einv_{ik} E_{lm} a_{lk} a_{mj}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QuadraticElement<K> rel;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t m = 0; m < n; ++m)
                        rel.add({letter(l, k), letter(m, j)}, einv(i, k) * e(l, m));
            if (i == j) rel.add({}, -one);
            h.relations.push_back(std::move(rel));
        }
    // a E^{-1} a^t E - I:   (i,j) entry: sum_{k,l,m} Einv_{kl} E_{mj} a_{ik} a_{ml}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QuadraticElement<K> rel;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t m = 0; m < n; ++m)
                        rel.add({letter(i, k), letter(m, l)}, einv(k, l) * e(m, j));
            if (i == j) rel.add({}, -one);
            h.relations.push_back(std::move(rel));
        }
    return h;
}

namespace detail {

/// Words of length <= N over an alphabet, ordered by descending length and
/// lexicographically within a length (so echelon pivots confine a row to its
/// pivot's filtration level and below).
class WordSpace {
  public:
    WordSpace(std::size_t alphabet, unsigned max_len, std::size_t budget) {
        std::size_t count = 1, power = 1;
        for (unsigned l = 1; l <= max_len; ++l) {
            power *= alphabet;
            count += power;
            if (count > budget) throw BudgetExceeded("word space exceeds the configured budget");
        }
        for (unsigned len = max_len + 1; len-- > 0;) {
            Word w(len, 0);
            while (true) {
                index_.emplace(w, words_.size());
                words_.push_back(w);
                // next word of the same length
                std::size_t pos = len;
                while (pos > 0 && w[pos - 1] + 1 == alphabet) w[--pos] = 0;
                if (pos == 0) break;
                ++w[pos - 1];
            }
            if (len == 0) break;
        }
    }

    std::size_t size() const { return words_.size(); }
    std::size_t index_of(const Word& w) const { return index_.at(w); }
    const Word& word(std::size_t i) const { return words_[i]; }
    std::size_t length_of(std::size_t i) const { return words_[i].size(); }

  private:
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
};

template <class K>
Word concat(const Word& a, const Word& b, const Word& c) {
    Word w;
    w.reserve(a.size() + b.size() + c.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

/// Rows spanning the ideal slice {w1 * rel * w2 : |w1|+|w2| <= N-2} in the
/// word space.
template <class K>
Matrix<K> ideal_slice(const HopfPresentation<K>& h, const WordSpace& ws, unsigned max_len) {
    const std::size_t alphabet = h.n * h.n;
    std::vector<Word> pads{{}};
    std::size_t first_of_len = 0;
    for (unsigned l = 1; l + 2 <= max_len; ++l) {
        const std::size_t begin = first_of_len, end = pads.size();
        for (std::size_t i = begin; i < end; ++i)
            for (unsigned a = 0; a < alphabet; ++a) {
                Word w = pads[i];
                w.push_back(a);
                pads.push_back(std::move(w));
            }
        first_of_len = end;
    }
    std::vector<std::vector<K>> rows;
    for (const auto& rel : h.relations)
        for (const Word& w1 : pads)
            for (const Word& w2 : pads) {
                if (w1.size() + w2.size() + 2 > max_len) continue;
                std::vector<K> row(ws.size());
                for (const auto& [mid, c] : rel.terms)
                    row[ws.index_of(concat<K>(w1, mid, w2))] += c;
                rows.push_back(std::move(row));
            }
    Matrix<K> m(rows.size(), ws.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < ws.size(); ++c) m(r, c) = std::move(rows[r][c]);
    return m;
}

}  // namespace detail

/// Cumulative dimensions of the filtration F_0 <= F_1 <= ... <= F_N of
/// H(E), computed against the degree-<=N ideal slice.
template <class K>
std::vector<std::size_t> filtered_dims(const HopfPresentation<K>& h, unsigned max_len,
                                       std::size_t budget = 500000) {
    const detail::WordSpace ws(h.n * h.n, max_len, budget);
    const Matrix<K> slice = detail::ideal_slice(h, ws, max_len);
    const auto pivots = slice.pivot_columns();
    // pivot in a word of length L means the echelon row lies in F_L
    std::vector<std::size_t> ideal_by_level(max_len + 1, 0);
    for (std::size_t col : pivots) ++ideal_by_level[ws.length_of(col)];
    std::vector<std::size_t> words_by_level(max_len + 1, 0);
    for (std::size_t i = 0; i < ws.size(); ++i) ++words_by_level[ws.length_of(i)];

    std::vector<std::size_t> out;
    std::size_t words_cum = 0, ideal_cum = 0;
    for (unsigned m = 0; m <= max_len; ++m) {
        words_cum += words_by_level[m];
        ideal_cum += ideal_by_level[m];
        out.push_back(words_cum - ideal_cum);
    }
    return out;
}

/// Standard-monomial count for quantum SL(2): monomials a^i b^j c^k plus
/// d^l b^j c^k (l >= 1), cumulative by total degree.
inline std::vector<std::size_t> pbw_count_slq2(unsigned max_degree) {
    std::vector<std::size_t> out;
    std::size_t cum = 0;
    for (unsigned n = 0; n <= max_degree; ++n) {
        std::size_t level = 0;
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; i + j <= n; ++j)
                for (unsigned k = 0; i + j + k <= n; ++k)
                    if (i + j + k == n) ++level;
        for (unsigned l = 1; l <= n; ++l)
            for (unsigned j = 0; l + j <= n; ++j)
                for (unsigned k = 0; l + j + k <= n; ++k)
                    if (l + j + k == n) ++level;
        cum += level;
        out.push_back(cum);
    }
    return out;
}

/// Is the element in the span of the degree-<=2 ideal slice?
template <class K>
bool in_degree2_slice(const HopfPresentation<K>& h, const QuadraticElement<K>& elt,
                      std::size_t budget = 500000) {
    const detail::WordSpace ws(h.n * h.n, 2, budget);
    Matrix<K> slice = detail::ideal_slice(h, ws, 2);
    const std::size_t base_rank = slice.rank();
    Matrix<K> extended(slice.rows() + 1, slice.cols());
    for (std::size_t r = 0; r < slice.rows(); ++r)
        for (std::size_t c = 0; c < slice.cols(); ++c) extended(r, c) = slice(r, c);
    for (const auto& [w, c] : elt.terms) extended(slice.rows(), ws.index_of(w)) = c;
    return extended.rank() == base_rank;
}

/// a^t E a - E must lie in the relation span (the comodule-map identity).
template <class K>
bool comodule_map_check(const HopfPresentation<K>& h) {
    const std::size_t n = h.n;
    auto letter = [n](std::size_t a, std::size_t b) {
        return static_cast<unsigned>(a * n + b);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QuadraticElement<K> elt;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    elt.add({letter(k, i), letter(l, j)}, h.form(k, l));
            elt.add({}, -h.form(i, j));
            if (!in_degree2_slice(h, elt)) return false;
        }
    return true;
}

/// Entries of S(a) a - I and a S(a) - I with S(a) = E^{-1} a^t E must lie in
/// the relation ideal; by construction they are the defining relations, and
/// this check confirms the bookkeeping.
template <class K>
bool antipode_check(const HopfPresentation<K>& h) {
    for (const auto& rel : h.relations)
        if (!in_degree2_slice(h, rel)) return false;
    return true;
}

template <class K>
struct Slq2Specialization {
    Matrix<K> form;    // the calibrated 2x2 form
    bool verdict = false;
    std::vector<std::string> failed_relations;
};

/// The antidiagonal form [[0, -q], [1, 0]] realizes quantum SL(2): all seven
/// defining relations of the q-deformed coordinate algebra lie in the
/// relation ideal of H(E). The membership test pins the sign convention.
template <class K>
Slq2Specialization<K> slq2_specialization(const K& q) {
    if (q.is_zero()) throw DivisionByZero();
    const K one = q.one(), zero = q.zero();
    Slq2Specialization<K> out;
    out.form = Matrix<K>{{zero, -q}, {one, zero}};
    const HopfPresentation<K> h = h_relations(out.form);

    // letters: a = a_00, b = a_01, c = a_10, d = a_11
    const unsigned A = 0, B = 1, C = 2, D = 3;
    const K qinv = q.inverse();
    auto rel2 = [&](unsigned x, unsigned y, unsigned u, unsigned v, const K& coeff) {
        QuadraticElement<K> e;
        e.add({x, y}, one);
        e.add({u, v}, -coeff);
        return e;
    };
    std::vector<std::pair<std::string, QuadraticElement<K>>> rels;
    rels.emplace_back("ba = q ab", rel2(B, A, A, B, q));
    rels.emplace_back("db = q bd", rel2(D, B, B, D, q));
    rels.emplace_back("ca = q ac", rel2(C, A, A, C, q));
    rels.emplace_back("dc = q cd", rel2(D, C, C, D, q));
    rels.emplace_back("bc = cb", rel2(B, C, C, B, one));
    {
        QuadraticElement<K> e;  // ad - da - (q^{-1} - q) bc
        e.add({A, D}, one);
        e.add({D, A}, -one);
        e.add({B, C}, -(qinv - q));
        rels.emplace_back("ad - da = (q^-1 - q) bc", std::move(e));
    }
    {
        QuadraticElement<K> e;  // ad - q^{-1} bc - 1
        e.add({A, D}, one);
        e.add({B, C}, -qinv);
        e.add({}, -one);
        rels.emplace_back("ad - q^-1 bc = 1", std::move(e));
    }

    out.verdict = true;
    for (auto& [name, elt] : rels) {
        if (!in_degree2_slice(h, elt)) {
            out.verdict = false;
            out.failed_relations.push_back(name);
        }
    }
    return out;
}

}  // namespace qsl2
