#pragma once

/**
 * @file chebyshev.hpp
 * @brief Chebyshev-type polynomials P_n and Q_l, quantum integers, and the
 *        Grothendieck-ring composition identity, all over Z.
 *
 * P_n is fixed by P_n(2cos x) = sin((n+1)x)/sin x and satisfies
 * P_0 = 1, P_1 = x, P_{n+1} = x P_n - P_{n-1}. Q_l is fixed by
 * Q_l(2cos x) = 2cos(lx) and equals P_l - P_{l-2} for l >= 2.
 * Coefficients stay integral; specialization to a field happens only at
 * evaluation time, so every identity here is characteristic-free.
 */

#include <mutex>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace qsl2 {

/// P_n, cached.
inline IntPoly cheb_p(unsigned n) {
    static std::vector<IntPoly> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (table.empty()) {
        table.push_back(IntPoly::constant(Integer(1)));
        table.push_back(IntPoly::monomial(Integer(1), 1));
    }
    const IntPoly x = IntPoly::monomial(Integer(1), 1);
    while (table.size() <= n) {
        const std::size_t k = table.size();
        table.push_back(x * table[k - 1] - table[k - 2]);
    }
    return table[n];
}

/// Q_l = P_l - P_{l-2} for l >= 2; Q_1 = x, Q_0 = 2.
inline IntPoly cheb_q(unsigned l) {
    if (l == 0) return IntPoly::constant(Integer(2));
    if (l == 1) return IntPoly::monomial(Integer(1), 1);
    return cheb_p(l) - cheb_p(l - 2);
}

/// Quantum integer [n]_q = P_{n-1}(q + q^{-1}); equals (q^n - q^-n)/(q - q^-1)
/// away from q^2 = 1 and the limit value +-n at q = +-1.
template <class K>
K quantum_integer(unsigned n, const K& q) {
    if (n == 0) return q.zero();
    const K t = q + q.inverse();
    return cheb_p(n - 1).eval_lifted(t, [&q](const Integer& c) { return q.from_integer(c); });
}

/// P_{l-1}(x) * P_n(Q_l(x)) == P_{ln+l-1}(x) as exact integer polynomials.
inline bool composition_identity_check(unsigned l, unsigned n) {
    if (l == 0) throw std::invalid_argument("composition identity requires l >= 1");
    const IntPoly lhs = cheb_p(l - 1) * cheb_p(n).compose(cheb_q(l));
    return lhs == cheb_p(l * n + l - 1);
}

/// Does P_m annihilate the integer matrix a?
inline bool cheb_p_annihilates(const Matrix<Integer>& a, unsigned m) {
    return eval_at_matrix(cheb_p(m), a).is_zero();
}

}  // namespace qsl2
