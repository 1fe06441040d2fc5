#pragma once

/**
 * @file numeric.hpp
 * @brief Integer utilities on top of GMP: divisor enumeration, perfect squares,
 *        deterministic primality at small scale.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace qsl2 {

using Integer = mpz_class;

inline bool is_zero_value(const Integer& x) { return sgn(x) == 0; }

/// Trial division followed by Pollard rho for the few survivors.
/// Desk-scale inputs only (constant coefficients of small characteristic polynomials).
namespace detail {

inline Integer pollard_rho(const Integer& n) {
    // n composite, odd, not a prime power of interest; returns a nontrivial factor.
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (sgn(diff) < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n <= 1) return;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(static_cast<long>(p))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    Integer d = 17;
    while (d * d <= n && d < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    Integer f = pollard_rho(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

}  // namespace detail

/// All positive divisors of |n|, ascending. n must be nonzero.
inline std::vector<Integer> positive_divisors(Integer n) {
    if (sgn(n) < 0) n = -n;
    std::map<Integer, unsigned> fac;
    detail::factor_into(n, fac);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Exact integer square root if n is a perfect square.
inline bool perfect_square_root(const Integer& n, Integer& root) {
    if (sgn(n) < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Euler totient, by factorization.
inline unsigned long euler_phi(unsigned long n) {
    std::map<Integer, unsigned> fac;
    detail::factor_into(Integer(static_cast<long>(n)), fac);
    unsigned long phi = 1;
    for (const auto& [p, e] : fac) {
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        unsigned long pk = 1;
        for (unsigned k = 1; k < e; ++k) pk *= pl;
        phi *= pk * (pl - 1);
    }
    return n == 0 ? 0 : phi;
}

}  // namespace qsl2
