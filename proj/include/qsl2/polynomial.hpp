#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * Poly<T> works over any commutative ring (addition, multiplication,
 * evaluation); division, gcd and the monic normal form additionally require
 * T to be a field. Trailing zero coefficients are always stripped, so
 * degree() is exact and the zero polynomial has degree -1.
 */

#include <cassert>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "rational.hpp"

namespace qsl2 {

template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { strip(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
    /// c * x^k
    static Poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
    T leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero_value(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly operator*(const T& s) const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Horner evaluation in the coefficient ring.
    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Horner evaluation in another ring; coefficients are lifted by `lift`.
    template <class S, class Lift>
    S eval_lifted(const S& x, Lift lift) const {
        S acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
        return acc;
    }

    /// Polynomial composition: (*this)(inner).
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> r(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    // --- field-coefficient operations ---

    /// Euclidean division; requires invertible leading coefficient of d.
    void divmod(const Poly& d, Poly& quo, Poly& rem) const {
        if (d.is_zero()) throw DivisionByZero();
        rem = *this;
        quo = Poly();
        const T lead_inv = d.leading().inverse();
        std::vector<T> q(rem.c_.size() > d.c_.size() ? rem.c_.size() - d.c_.size() + 1 : 1);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            const std::size_t k = static_cast<std::size_t>(rem.degree() - d.degree());
            const T f = rem.leading() * lead_inv;
            q[k] = q[k] + f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rem.c_[i + k] = rem.c_[i + k] - f * d.c_[i];
            rem.strip();
        }
        quo = Poly(std::move(q));
    }

    Poly operator/(const Poly& d) const {
        Poly q, r;
        divmod(d, q, r);
        return q;
    }
    Poly operator%(const Poly& d) const {
        Poly q, r;
        divmod(d, q, r);
        return r;
    }

    /// Exact division; throws if the remainder is nonzero.
    Poly exact_div(const Poly& d) const {
        Poly q, r;
        divmod(d, q, r);
        if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Exact square root of a monic polynomial of even degree, if one exists.
    /// Coefficient field must not have characteristic 2.
    bool square_root(Poly& out) const {
        if (is_zero()) { out = Poly(); return true; }
        if (degree() % 2 != 0) return false;
        if (!(leading() == leading().one())) return false;
        const std::size_t m = static_cast<std::size_t>(degree()) / 2;
        const T two = leading().one() + leading().one();
        if (two.is_zero()) return false;
        const T half = two.inverse();
        std::vector<T> g(m + 1);
        g[m] = leading().one();
        for (std::size_t i = m; i-- > 0;) {
            T acc = coeff(i + m);
            for (std::size_t a = i + 1; a + 1 <= m && m + i >= a + 1; ++a) {
                const std::size_t b = m + i - a;
                if (b > i && b < m) acc = acc - g[a] * g[b];
            }
            g[i] = acc * half;
        }
        Poly cand{std::vector<T>(std::move(g))};
        if (cand * cand == *this) { out = cand; return true; }
        return false;
    }

  private:
    std::vector<T> c_;

    void strip() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class T>
inline bool is_zero_value(const Poly<T>& p) { return p.is_zero(); }

// ---- pretty printing ----

namespace detail {
inline std::string coeff_repr(const Integer& c) { return c.get_str(); }
inline std::string coeff_repr(const Rational& c) { return c.str(); }
template <class T>
std::string coeff_repr(const T& c) { return c.str(); }

inline bool coeff_negative(const Integer& c) { return sgn(c) < 0; }
inline bool coeff_negative(const Rational& c) { return c < Rational(0); }
template <class T>
bool coeff_negative(const T&) { return false; }

}  // namespace detail

/// Human-readable form, e.g. "x^5 - 4x^3 + 3x". Coefficients that are not
/// plain signed magnitudes (e.g. cyclotomic elements) are parenthesized.
template <class T>
std::string to_string(const Poly<T>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const T c = p.coeff(static_cast<std::size_t>(i));
        if (is_zero_value(c)) continue;
        const bool neg = detail::coeff_negative(c);
        std::string mag = detail::coeff_repr(neg ? static_cast<T>(-c) : c);
        const bool needs_parens =
            mag.find_first_of("+-/ ") != std::string::npos;
        if (needs_parens) mag = "(" + detail::coeff_repr(c) + ")";

        if (out.empty()) {
            if (neg && !needs_parens) out += "-";
        } else {
            out += (neg && !needs_parens) ? " - " : " + ";
        }

        if (i == 0) {
            out += mag;
        } else {
            if (!(mag == "1" && !needs_parens)) out += mag;
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qsl2
