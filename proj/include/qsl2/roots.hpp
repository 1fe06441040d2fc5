#pragma once

/**
 * @file roots.hpp
 * @brief Root enumeration in the base field.
 *
 * Complete for Q (rational root bounds) and for F_p (exhaustive scan). Over
 * Q(zeta_n) and Q(q) roots are restricted to linear factors peeled off
 * exactly: degree <= 2 factors are solved directly (quadratics via an exact
 * square-root attempt), higher degrees are probed against a deterministic
 * finite candidate set; anything found is verified with p(r) = 0 before it
 * is returned. Absence of a reported root is therefore not a proof of
 * nonexistence for these two fields.
 */

#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace qsl2 {

namespace detail {

inline const std::vector<Rational>& small_rationals() {
    static const std::vector<Rational> v = [] {
        std::vector<Rational> r;
        for (long n : {1, -1, 2, -2, 3, -3, 4, -4, 5, -5}) r.emplace_back(n);
        for (long n : {1, -1, 3, -3}) r.emplace_back(n, 2);
        for (long n : {1, -1, 2, -2}) r.emplace_back(n, 3);
        return r;
    }();
    return v;
}

template <class K>
std::vector<K> root_candidates(const K& sample);

template <>
inline std::vector<Cyclotomic> root_candidates<Cyclotomic>(const Cyclotomic& sample) {
    const unsigned long n = sample.conductor();
    std::vector<Cyclotomic> out;
    if (n == 0) return out;
    for (const Rational& c : small_rationals())
        for (unsigned long j = 0; j < n; ++j)
            out.push_back(sample.from_rational(c) * Cyclotomic::zeta_power(n, static_cast<long>(j)));
    for (long s : {1, -1, 2, -2})
        for (unsigned long a = 0; a < n; ++a)
            for (unsigned long b = a; b < n; ++b)
                out.push_back(sample.from_int(s) *
                              (Cyclotomic::zeta_power(n, static_cast<long>(a)) +
                               Cyclotomic::zeta_power(n, static_cast<long>(b))));
    return out;
}

template <>
inline std::vector<RationalFunction> root_candidates<RationalFunction>(const RationalFunction&) {
    std::vector<RationalFunction> out;
    const RationalFunction q = RationalFunction::variable();
    std::vector<RationalFunction> powers;
    for (long e = -3; e <= 3; ++e) {
        RationalFunction p(1);
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p = e < 0 ? p / q : p * q;
        powers.push_back(p);
    }
    for (const Rational& c : small_rationals())
        for (const auto& p : powers) out.push_back(RationalFunction(c) * p);
    for (long s : {1, -1, 2, -2})
        for (long l = 1; l <= 4; ++l) {
            RationalFunction ql(1);
            for (long i = 0; i < l; ++i) ql = ql * q;
            out.push_back(RationalFunction(Rational(s)) * (ql + ql.inverse()));
        }
    return out;
}

/// Divide out (x - r) as many times as it divides p; r is a verified root.
template <class K>
void peel_root(Poly<K>& p, const K& r) {
    const Poly<K> lin{std::vector<K>{-r, r.one()}};
    while (!p.is_zero() && p.degree() >= 1 && is_zero_value(p.eval(r))) p = p.exact_div(lin);
}

template <class K>
bool try_quadratic(const Poly<K>& p, std::vector<K>& roots) {
    if (p.degree() != 2) return false;
    if constexpr (requires(const K& x, K& out) { { x.square_root(out) } -> std::convertible_to<bool>; }) {
        const K a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        const K two = a.one() + a.one();
        if (two.is_zero()) return false;
        const K four = two + two;
        const K disc = b * b - four * a * c;
        K sq;
        if (!disc.square_root(sq)) return false;
        const K denom_inv = (two * a).inverse();
        roots.push_back((-b + sq) * denom_inv);
        if (!sq.is_zero()) roots.push_back((-b - sq) * denom_inv);
        return true;
    } else {
        return false;
    }
}

}  // namespace detail

/// Distinct roots of p in Q, complete, in deterministic order.
inline std::vector<Rational> rational_roots(const Poly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    Integer denom_lcm = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> ic;
    ic.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Rational x = c * Rational(denom_lcm);
        ic.push_back(x.numerator());
    }
    std::size_t low = 0;
    while (low < ic.size() && sgn(ic[low]) == 0) ++low;

    std::vector<Rational> roots;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= ic.size()) return roots;  // monomial: only root 0

    const Integer a0 = ic[low];
    const Integer an = ic.back();
    for (const Integer& u : positive_divisors(a0)) {
        for (const Integer& v : positive_divisors(an)) {
            for (int s : {1, -1}) {
                const Rational cand(s > 0 ? u : Integer(-u), v);
                if (!is_zero_value(p.eval(cand))) continue;
                bool seen = false;
                for (const auto& r : roots) seen = seen || r == cand;
                if (!seen) roots.push_back(cand);
            }
        }
    }
    return roots;
}

/// Distinct roots of p in F_p, complete (exhaustive scan).
inline std::vector<PrimeField> rational_roots(const Poly<PrimeField>& p) {
    if (p.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    long mod = 0;
    for (const auto& c : p.coefficients())
        if (c.modulus() != 0) { mod = c.modulus(); break; }
    if (mod == 0) throw FieldMismatch("prime-field polynomial carries no modulus");
    if (mod > 10'000'000) throw BudgetExceeded("root scan over F_p with p > 10^7");
    std::vector<PrimeField> roots;
    for (long v = 0; v < mod; ++v) {
        const PrimeField cand(v, mod);
        if (is_zero_value(p.eval(cand))) roots.push_back(cand);
    }
    return roots;
}

/// Roots found by exact linear-factor peeling (see file comment).
template <class K>
std::vector<K> rational_roots(const Poly<K>& p_in) {
    if (p_in.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    Poly<K> p = p_in;
    K sample{};
    for (const auto& c : p.coefficients())
        if (!is_zero_value(c)) { sample = c; break; }

    std::vector<K> roots;
    auto push_unique = [&roots](const K& r) {
        for (const auto& x : roots)
            if (x == r) return;
        roots.push_back(r);
    };

    // strip x^k
    if (p.degree() >= 1 && is_zero_value(p.coeff(0))) {
        push_unique(sample.zero());
        std::vector<K> shifted(p.coefficients().begin() + 1, p.coefficients().end());
        while (!shifted.empty() && is_zero_value(shifted.front()))
            shifted.erase(shifted.begin());
        p = Poly<K>(std::move(shifted));
    }

    const std::vector<K> candidates = detail::root_candidates<K>(sample);
    bool progress = true;
    while (progress && p.degree() >= 1) {
        progress = false;
        if (p.degree() == 1) {
            const K r = -p.coeff(0) / p.coeff(1);
            push_unique(r);
            break;
        }
        std::vector<K> quad;
        if (detail::try_quadratic(p, quad)) {
            for (const auto& r : quad) push_unique(r);
            break;
        }
        for (const auto& cand : candidates) {
            if (!is_zero_value(p.eval(cand))) continue;
            push_unique(cand);
            detail::peel_root(p, cand);
            progress = true;
            break;
        }
    }
    return roots;
}

}  // namespace qsl2
