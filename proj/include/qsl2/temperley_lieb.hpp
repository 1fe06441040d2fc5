#pragma once

/**
 * @file temperley_lieb.hpp
 * @brief The Temperley-Lieb category TL(-q) as a diagram calculus.
 *
 * A diagram n -> m is a noncrossing perfect matching on n + m boundary
 * points of a rectangle: sources 0..n-1 along the bottom (left to right),
 * then targets along the top, numbered circularly (top side traversed right
 * to left), so that noncrossingness is the usual chord condition on a
 * circle. Diagrams never contain closed loops; loops arise only during
 * composition, where each one contributes a factor of the loop scalar
 * delta = -q - q^{-1}.
 */

#include <map>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace qsl2 {

class TLDiagram {
  public:
    /// pairing[c] = circular partner of boundary point c.
    TLDiagram(unsigned n, unsigned m, std::vector<int> pairing)
        : n_(n), m_(m), pair_(std::move(pairing)) {
        validate();
    }

    static TLDiagram identity(unsigned n) {
        std::vector<int> p(2 * n);
        for (unsigned i = 0; i < n; ++i) {
            p[i] = static_cast<int>(2 * n - 1 - i);
            p[2 * n - 1 - i] = static_cast<int>(i);
        }
        return TLDiagram(n, n, std::move(p));
    }

    /// alpha: 0 -> 2.
    static TLDiagram cup() { return TLDiagram(0, 2, {1, 0}); }
    /// beta: 2 -> 0.
    static TLDiagram cap() { return TLDiagram(2, 0, {1, 0}); }

    /// e_i in TL_n (1-based i < n): cap on sources i-1, i and cup on the
    /// matching targets, all other strands straight.
    static TLDiagram e(unsigned i, unsigned n) {
        if (i < 1 || i >= n) throw std::invalid_argument("e(i,n) requires 1 <= i < n");
        std::vector<int> p(2 * n, -1);
        auto join = [&p](unsigned a, unsigned b) {
            p[a] = static_cast<int>(b);
            p[b] = static_cast<int>(a);
        };
        join(i - 1, i);                                    // source cap
        join(circ_of_target(n, n, i - 1), circ_of_target(n, n, i));  // target cup
        for (unsigned s = 0; s < n; ++s)
            if (s != i - 1 && s != i) join(s, circ_of_target(n, n, s));
        return TLDiagram(n, n, std::move(p));
    }

    unsigned sources() const { return n_; }
    unsigned targets() const { return m_; }
    const std::vector<int>& pairing() const { return pair_; }

    /// Circular index of left-indexed target j.
    static unsigned circ_of_target(unsigned n, unsigned m, unsigned j) {
        return n + (m - 1 - j);
    }
    /// Left index of a target given its circular index.
    static unsigned target_of_circ(unsigned n, unsigned m, unsigned c) {
        return m - 1 - (c - n);
    }

    bool operator==(const TLDiagram& o) const {
        return n_ == o.n_ && m_ == o.m_ && pair_ == o.pair_;
    }
    bool operator<(const TLDiagram& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (m_ != o.m_) return m_ < o.m_;
        return pair_ < o.pair_;
    }

    /// Stack d1 (n -> m) under d2 (m -> k); returns the resulting diagram
    /// and the number of closed loops swallowed.
    static std::pair<TLDiagram, unsigned> compose(const TLDiagram& d1, const TLDiagram& d2) {
        if (d1.m_ != d2.n_)
            throw BoundaryMismatch("composing " + std::to_string(d1.m_) + " targets with " +
                                   std::to_string(d2.n_) + " sources");
        const unsigned n = d1.n_, m = d1.m_, k = d2.m_;
        // node ids: sources 0..n-1, middle n..n+m-1, targets n+m..n+m+k-1
        const unsigned M0 = n, T0 = n + m;
        auto id1 = [&](unsigned c) { return c < n ? c : M0 + (m - 1 - (c - n)); };
        auto id2 = [&](unsigned c) { return c < m ? M0 + c : T0 + (k - 1 - (c - m)); };
        std::vector<int> edge1g(n + m + k, -1), edge2g(n + m + k, -1);
        for (unsigned c = 0; c < n + m; ++c) {
            const unsigned a = id1(c), b = id1(static_cast<unsigned>(d1.pair_[c]));
            edge1g[a] = static_cast<int>(b);
        }
        for (unsigned c = 0; c < m + k; ++c) {
            const unsigned a = id2(c), b = id2(static_cast<unsigned>(d2.pair_[c]));
            edge2g[a] = static_cast<int>(b);
        }

        std::vector<bool> mid_seen(m, false);
        std::vector<int> result_pair(n + k, -1);
        auto boundary_index = [&](unsigned node) -> int {
            if (node < M0) return static_cast<int>(node);        // source
            if (node >= T0) return static_cast<int>(n + (node - T0));  // target, left-indexed
            return -1;
        };
        auto walk = [&](unsigned start, bool start_in_d1) -> unsigned {
            bool in_d1 = start_in_d1;
            unsigned cur = start;
            while (true) {
                const int nxt = in_d1 ? edge1g[cur] : edge2g[cur];
                cur = static_cast<unsigned>(nxt);
                if (cur >= M0 && cur < T0) {
                    mid_seen[cur - M0] = true;
                    in_d1 = !in_d1;
                    continue;
                }
                return cur;
            }
        };
        // boundary-to-boundary strands
        for (unsigned s = 0; s < n; ++s) {
            if (result_pair[s] != -1) continue;
            const unsigned end = walk(s, true);
            const int bi = boundary_index(end);
            result_pair[s] = bi;
            result_pair[static_cast<unsigned>(bi)] = static_cast<int>(s);
        }
        for (unsigned t = 0; t < k; ++t) {
            const unsigned node = T0 + t;
            const int me = boundary_index(node);
            if (result_pair[static_cast<unsigned>(me)] != -1) continue;
            const unsigned end = walk(node, false);
            const int bi = boundary_index(end);
            result_pair[static_cast<unsigned>(me)] = bi;
            result_pair[static_cast<unsigned>(bi)] = me;
        }
        // closed loops among unvisited middle nodes
        unsigned loops = 0;
        for (unsigned j = 0; j < m; ++j) {
            if (mid_seen[j]) continue;
            ++loops;
            unsigned cur = M0 + j;
            bool in_d1 = true;
            while (true) {
                mid_seen[cur - M0] = true;
                cur = static_cast<unsigned>(in_d1 ? edge1g[cur] : edge2g[cur]);
                in_d1 = !in_d1;
                if (cur == M0 + j) break;
            }
        }
        // left-indexed result -> circular pairing on n + k points
        std::vector<int> circ(n + k, -1);
        auto to_circ = [&](int left) {
            return left < static_cast<int>(n)
                       ? static_cast<unsigned>(left)
                       : circ_of_target(n, k, static_cast<unsigned>(left) - n);
        };
        for (unsigned a = 0; a < n + k; ++a) {
            const unsigned ca = to_circ(static_cast<int>(a));
            circ[ca] = static_cast<int>(to_circ(result_pair[a]));
        }
        return {TLDiagram(n, k, std::move(circ)), loops};
    }

    /// Horizontal juxtaposition.
    static TLDiagram tensor(const TLDiagram& d1, const TLDiagram& d2) {
        const unsigned n = d1.n_ + d2.n_, m = d1.m_ + d2.m_;
        std::vector<int> p(n + m, -1);
        auto map1 = [&](unsigned c) {
            return c < d1.n_ ? c : circ_of_target(n, m, target_of_circ(d1.n_, d1.m_, c));
        };
        auto map2 = [&](unsigned c) {
            return c < d2.n_ ? d1.n_ + c
                             : circ_of_target(n, m, d1.m_ + target_of_circ(d2.n_, d2.m_, c));
        };
        for (unsigned c = 0; c < d1.n_ + d1.m_; ++c) {
            const unsigned a = map1(c), b = map1(static_cast<unsigned>(d1.pair_[c]));
            p[a] = static_cast<int>(b);
        }
        for (unsigned c = 0; c < d2.n_ + d2.m_; ++c) {
            const unsigned a = map2(c), b = map2(static_cast<unsigned>(d2.pair_[c]));
            p[a] = static_cast<int>(b);
        }
        return TLDiagram(n, m, std::move(p));
    }

    std::string str() const {
        std::string s = std::to_string(n_) + "->" + std::to_string(m_) + " [";
        for (unsigned c = 0; c < pair_.size(); ++c) {
            if (static_cast<int>(c) < pair_[c]) {
                if (s.back() != '[') s += " ";
                s += std::to_string(c) + "-" + std::to_string(pair_[c]);
            }
        }
        return s + "]";
    }

  private:
    unsigned n_, m_;
    std::vector<int> pair_;

    void validate() const {
        const std::size_t N = static_cast<std::size_t>(n_) + m_;
        if ((N % 2) != 0) throw std::invalid_argument("n + m must be even");
        if (pair_.size() != N) throw std::invalid_argument("pairing has the wrong size");
        for (std::size_t c = 0; c < N; ++c) {
            const int p = pair_[c];
            if (p < 0 || p >= static_cast<int>(N) || p == static_cast<int>(c) ||
                pair_[static_cast<std::size_t>(p)] != static_cast<int>(c))
                throw std::invalid_argument("pairing is not a perfect matching");
        }
        // nesting criterion on the circular ordering
        for (std::size_t a = 0; a < N; ++a) {
            const std::size_t b = static_cast<std::size_t>(pair_[a]);
            if (b < a) continue;
            for (std::size_t c = a + 1; c < b; ++c) {
                const std::size_t d = static_cast<std::size_t>(pair_[c]);
                if (d < a || d > b) throw std::invalid_argument("pairing has crossing chords");
            }
        }
    }
};

/// All noncrossing perfect matchings of n + m circularly ordered points,
/// in deterministic order. Count for n = m is the Catalan number C_n.
inline std::vector<TLDiagram> tl_basis(unsigned n, unsigned m) {
    if ((n + m) % 2 != 0) throw std::invalid_argument("n + m must be even");
    const unsigned N = n + m;
    // enumerate pairings on a window of points, recursively
    struct Rec {
        std::vector<std::vector<std::pair<unsigned, unsigned>>> operator()(
            const std::vector<unsigned>& pts) const {
            if (pts.empty()) return {{}};
            std::vector<std::vector<std::pair<unsigned, unsigned>>> out;
            for (std::size_t j = 1; j < pts.size(); j += 2) {
                std::vector<unsigned> inner(pts.begin() + 1, pts.begin() + static_cast<long>(j));
                std::vector<unsigned> outer(pts.begin() + static_cast<long>(j) + 1, pts.end());
                for (const auto& pi : (*this)(inner))
                    for (const auto& po : (*this)(outer)) {
                        std::vector<std::pair<unsigned, unsigned>> v{{pts[0], pts[j]}};
                        v.insert(v.end(), pi.begin(), pi.end());
                        v.insert(v.end(), po.begin(), po.end());
                        out.push_back(std::move(v));
                    }
            }
            return out;
        }
    };
    std::vector<unsigned> pts(N);
    for (unsigned i = 0; i < N; ++i) pts[i] = i;
    std::vector<TLDiagram> basis;
    for (const auto& chords : Rec{}(pts)) {
        std::vector<int> pairing(N, -1);
        for (const auto& [a, b] : chords) {
            pairing[a] = static_cast<int>(b);
            pairing[b] = static_cast<int>(a);
        }
        basis.emplace_back(n, m, std::move(pairing));
    }
    return basis;
}

/// Finite K-linear combination of diagrams with common boundary sizes.
template <class K>
class TLElement {
  public:
    TLElement(unsigned n, unsigned m) : n_(n), m_(m) {}

    static TLElement single(const TLDiagram& d, const K& coeff) {
        TLElement e(d.sources(), d.targets());
        if (!is_zero_value(coeff)) e.terms_.emplace(d, coeff);
        return e;
    }
    static TLElement identity(unsigned n, const K& one) {
        return single(TLDiagram::identity(n), one);
    }

    unsigned sources() const { return n_; }
    unsigned targets() const { return m_; }
    const std::map<TLDiagram, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(const TLDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? K{} : it->second;
    }

    TLElement operator+(const TLElement& o) const {
        if (n_ != o.n_ || m_ != o.m_)
            throw BoundaryMismatch("adding elements with different boundaries");
        TLElement r(*this);
        for (const auto& [d, c] : o.terms_) r.add_term(d, c);
        return r;
    }
    TLElement operator-(const TLElement& o) const { return *this + o * K(-1); }
    TLElement operator*(const K& s) const {
        TLElement r(n_, m_);
        if (is_zero_value(s)) return r;
        for (const auto& [d, c] : terms_) r.add_term(d, c * s);
        return r;
    }

    bool operator==(const TLElement& o) const {
        return n_ == o.n_ && m_ == o.m_ && terms_ == o.terms_;
    }

    void add_term(const TLDiagram& d, const K& c) {
        if (d.sources() != n_ || d.targets() != m_)
            throw BoundaryMismatch("term has the wrong boundary sizes");
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!is_zero_value(c)) terms_.emplace(d, c);
            return;
        }
        it->second += c;
        if (is_zero_value(it->second)) terms_.erase(it);
    }

  private:
    unsigned n_, m_;
    std::map<TLDiagram, K> terms_;
};

/// Stack f (n -> m) under g (m -> k); each closed loop contributes delta.
template <class K>
TLElement<K> tl_compose(const TLElement<K>& f, const TLElement<K>& g, const K& delta) {
    if (f.targets() != g.sources())
        throw BoundaryMismatch("composing " + std::to_string(f.targets()) + " targets with " +
                               std::to_string(g.sources()) + " sources");
    TLElement<K> r(f.sources(), g.targets());
    for (const auto& [d1, c1] : f.terms())
        for (const auto& [d2, c2] : g.terms()) {
            auto [d, loops] = TLDiagram::compose(d1, d2);
            K c = c1 * c2;
            for (unsigned l = 0; l < loops; ++l) c = c * delta;
            r.add_term(d, c);
        }
    return r;
}

template <class K>
TLElement<K> tl_tensor(const TLElement<K>& f, const TLElement<K>& g) {
    TLElement<K> r(f.sources() + g.sources(), f.targets() + g.targets());
    for (const auto& [d1, c1] : f.terms())
        for (const auto& [d2, c2] : g.terms())
            r.add_term(TLDiagram::tensor(d1, d2), c1 * c2);
    return r;
}

/// The loop scalar of TL(-q).
template <class K>
K tl_loop_value(const K& q) {
    return -q - q.inverse();
}

/// Normal form of a diagram as cap layers followed by cup layers: first the
/// caps (source-side chords peeled innermost-first), then the cups (target-
/// side chords replayed outermost-first), with through strands passing
/// straight in between.
struct DiagramFactorization {
    unsigned sources = 0, targets = 0, through = 0;
    // (current width, strand position) for each elementary layer, in
    // application order; caps shrink the width by 2, cups grow it by 2
    std::vector<std::pair<unsigned, unsigned>> caps;
    std::vector<std::pair<unsigned, unsigned>> cups;
};

inline DiagramFactorization tl_factorize(const TLDiagram& d) {
    const unsigned n = d.sources(), m = d.targets();
    DiagramFactorization out;
    out.sources = n;
    out.targets = m;

    std::vector<std::pair<unsigned, unsigned>> source_chords, target_chords;
    const auto& pairing = d.pairing();
    for (unsigned c = 0; c < n + m; ++c) {
        const unsigned pc = static_cast<unsigned>(pairing[c]);
        if (pc < c) continue;
        const bool c_src = c < n, p_src = pc < n;
        if (c_src && p_src) {
            source_chords.push_back({c, pc});
        } else if (!c_src && !p_src) {
            const unsigned a = TLDiagram::target_of_circ(n, m, c);
            const unsigned b = TLDiagram::target_of_circ(n, m, pc);
            target_chords.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    out.through = n - 2 * static_cast<unsigned>(source_chords.size());

    auto peel = [](std::vector<std::pair<unsigned, unsigned>> chords, unsigned width) {
        std::vector<unsigned> alive(width);
        for (unsigned i = 0; i < width; ++i) alive[i] = i;
        std::vector<std::pair<unsigned, unsigned>> layers;
        while (!chords.empty()) {
            bool peeled = false;
            for (std::size_t ci = 0; ci < chords.size(); ++ci) {
                const auto [a, b] = chords[ci];
                std::size_t pa = alive.size(), pb = alive.size();
                for (std::size_t k = 0; k < alive.size(); ++k) {
                    if (alive[k] == a) pa = k;
                    if (alive[k] == b) pb = k;
                }
                if (pb != pa + 1) continue;
                layers.push_back({static_cast<unsigned>(alive.size()),
                                  static_cast<unsigned>(pa)});
                alive.erase(alive.begin() + static_cast<long>(pa),
                            alive.begin() + static_cast<long>(pa) + 2);
                chords.erase(chords.begin() + static_cast<long>(ci));
                peeled = true;
                break;
            }
            if (!peeled) throw std::logic_error("peeling stuck on a noncrossing diagram");
        }
        return layers;
    };

    out.caps = peel(source_chords, n);
    // target chords are peeled downward from width m, then replayed upward
    const auto down = peel(target_chords, m);
    for (std::size_t k = down.size(); k-- > 0;)
        out.cups.push_back({down[k].first - 2, down[k].second});
    return out;
}

/// Jones-Wenzl projector p_n, by the Wenzl recursion
/// p_k = p' + ([k-1]/[k]) p' e_{k-1} p' with p' = p_{k-1} (x) id_1.
/// Fails fast with QuantumIntegerZero(k) at the first vanishing [k]_q.
template <class K>
TLElement<K> jones_wenzl(unsigned n, const K& q) {
    if (n == 0) throw std::invalid_argument("jones_wenzl requires n >= 1");
    const K one = q.one();
    const K delta = tl_loop_value(q);
    std::vector<K> qint{q.zero(), one};  // [0], [1]
    for (unsigned k = 2; k <= n; ++k) {
        const K v = quantum_integer(k, q);
        if (v.is_zero()) throw QuantumIntegerZero(static_cast<int>(k));
        qint.push_back(v);
    }
    TLElement<K> p = TLElement<K>::identity(1, one);
    for (unsigned k = 2; k <= n; ++k) {
        const TLElement<K> prime = tl_tensor(p, TLElement<K>::identity(1, one));
        const TLElement<K> ek = TLElement<K>::single(TLDiagram::e(k - 1, k), one);
        const TLElement<K> mid = tl_compose(tl_compose(prime, ek, delta), prime, delta);
        p = prime + mid * (qint[k - 1] / qint[k]);
    }
    return p;
}

}  // namespace qsl2
