#pragma once

/**
 * @file cyclotomic.hpp
 * @brief The cyclotomic field Q(zeta_n), elements as residues modulo the
 *        n-th cyclotomic polynomial.
 *
 * The conductor n is a runtime tag; untagged elements (n = 0) are rational
 * constants and adopt a conductor on contact. Phi_n is irreducible over Q,
 * so every nonzero residue is invertible.
 */

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace qsl2 {

namespace detail {

inline const RatPoly& cyclotomic_step(std::map<unsigned long, RatPoly>& cache, unsigned long n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xn(n + 1);
    xn[0] = Rational(-1);
    xn[n] = Rational(1);
    RatPoly phi{std::vector<Rational>(std::move(xn))};
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        phi = phi.exact_div(cyclotomic_step(cache, d));
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace detail

/// n-th cyclotomic polynomial over Q, computed by peeling divisors of x^n - 1.
inline const RatPoly& cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
    static std::map<unsigned long, RatPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return detail::cyclotomic_step(cache, n);
}

class Cyclotomic {
  public:
    Cyclotomic() : n_(0) {}
    Cyclotomic(long c) : n_(0), res_(RatPoly::constant(Rational(c))) {}
    explicit Cyclotomic(const Rational& c) : n_(0), res_(RatPoly::constant(c)) {}
    Cyclotomic(unsigned long n, RatPoly residue) : n_(n), res_(std::move(residue)) { reduce(); }

    /// The generator zeta_n.
    static Cyclotomic zeta(unsigned long n) {
        return Cyclotomic(n, RatPoly::monomial(Rational(1), 1));
    }
    /// zeta_n^k (k may be negative).
    static Cyclotomic zeta_power(unsigned long n, long k) {
        long r = k % static_cast<long>(n);
        if (r < 0) r += static_cast<long>(n);
        return Cyclotomic(n, RatPoly::monomial(Rational(1), static_cast<std::size_t>(r)));
    }

    bool is_zero() const { return res_.is_zero(); }
    unsigned long conductor() const { return n_; }
    const RatPoly& residue() const { return res_; }

    Cyclotomic zero() const { return Cyclotomic(n_, RatPoly()); }
    Cyclotomic one() const { return Cyclotomic(n_, RatPoly::constant(Rational(1))); }
    Cyclotomic from_int(long c) const { return Cyclotomic(n_, RatPoly::constant(Rational(c))); }
    Cyclotomic from_integer(const Integer& c) const {
        return Cyclotomic(n_, RatPoly::constant(Rational(c)));
    }
    Cyclotomic from_rational(const Rational& c) const {
        return Cyclotomic(n_, RatPoly::constant(c));
    }

    Cyclotomic operator-() const { return Cyclotomic(n_, -res_); }
    Cyclotomic operator+(const Cyclotomic& o) const {
        auto [a, b] = merged(*this, o);
        return Cyclotomic(a.n_, a.res_ + b.res_);
    }
    Cyclotomic operator-(const Cyclotomic& o) const {
        auto [a, b] = merged(*this, o);
        return Cyclotomic(a.n_, a.res_ - b.res_);
    }
    Cyclotomic operator*(const Cyclotomic& o) const {
        auto [a, b] = merged(*this, o);
        return Cyclotomic(a.n_, a.res_ * b.res_);
    }
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (n_ == 0) return Cyclotomic(res_.coeff(0).inverse());
        // extended Euclid: s*res + t*Phi = 1
        const RatPoly& phi = cyclotomic_polynomial(n_);
        RatPoly r0 = phi, r1 = res_;
        RatPoly s0, s1 = RatPoly::constant(Rational(1));
        while (!r1.is_zero()) {
            RatPoly q, r;
            r0.divmod(r1, q, r);
            RatPoly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 = gcd (a nonzero constant, phi irreducible), s0 * res = r0 (mod phi)
        return Cyclotomic(n_, s0 * r0.leading().inverse());
    }

    bool operator==(const Cyclotomic& o) const {
        if (n_ != 0 && o.n_ != 0 && n_ != o.n_)
            throw FieldMismatch("comparing elements of Q(zeta_" + std::to_string(n_) +
                                ") and Q(zeta_" + std::to_string(o.n_) + ")");
        auto [a, b] = merged(*this, o);
        return a.res_ == b.res_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const {
        if (n_ == 0) return res_.is_zero() ? "0" : res_.coeff(0).str();
        return "zeta " + std::to_string(n_) + ": " + to_string(res_, "z");
    }

    static const char* field_name() { return "cyclotomic"; }

  private:
    unsigned long n_;  // 0 = untagged rational constant
    RatPoly res_;

    void reduce() {
        if (n_ == 0) return;
        const RatPoly& phi = cyclotomic_polynomial(n_);
        if (res_.degree() >= phi.degree()) res_ = res_ % phi;
    }

    static std::pair<Cyclotomic, Cyclotomic> merged(Cyclotomic a, Cyclotomic b) {
        if (a.n_ == 0 && b.n_ != 0) { a.n_ = b.n_; a.reduce(); }
        if (b.n_ == 0 && a.n_ != 0) { b.n_ = a.n_; b.reduce(); }
        if (a.n_ != b.n_)
            throw FieldMismatch("mixing Q(zeta_" + std::to_string(a.n_) + ") and Q(zeta_" +
                                std::to_string(b.n_) + ")");
        return {a, b};
    }
};

inline bool is_zero_value(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace qsl2
