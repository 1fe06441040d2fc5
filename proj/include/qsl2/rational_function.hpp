#pragma once

/**
 * @file rational_function.hpp
 * @brief The field Q(q) of rational functions in one formal variable.
 *
 * Stored reduced: numerator and denominator coprime, denominator monic,
 * zero represented as 0/1.
 */

#include <string>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace qsl2 {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(RatPoly::constant(Rational(1))) {}
    RationalFunction(long c)
        : num_(RatPoly::constant(Rational(c))), den_(RatPoly::constant(Rational(1))) {}
    explicit RationalFunction(const Rational& c)
        : num_(RatPoly::constant(c)), den_(RatPoly::constant(Rational(1))) {}
    explicit RationalFunction(RatPoly num)
        : num_(std::move(num)), den_(RatPoly::constant(Rational(1))) {}
    RationalFunction(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    /// The variable q itself.
    static RationalFunction variable() {
        return RationalFunction(RatPoly::monomial(Rational(1), 1));
    }

    bool is_zero() const { return num_.is_zero(); }
    const RatPoly& numerator() const { return num_; }
    const RatPoly& denominator() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction zero() const { return RationalFunction(); }
    RationalFunction one() const { return RationalFunction(1); }
    RationalFunction from_int(long c) const { return RationalFunction(c); }
    RationalFunction from_integer(const Integer& c) const {
        return RationalFunction(Rational(c));
    }
    RationalFunction from_rational(const Rational& c) const { return RationalFunction(c); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, no_normalize{}); }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Exact square root when one exists in Q(q).
    bool square_root(RationalFunction& out) const {
        if (is_zero()) { out = RationalFunction(); return true; }
        const Rational lead = num_.leading();
        Rational lead_root;
        if (!lead.square_root(lead_root)) return false;
        RatPoly num_monic = num_ * lead.inverse();
        RatPoly gn, gd;
        if (!num_monic.square_root(gn)) return false;
        if (!den_.square_root(gd)) return false;
        out = RationalFunction(gn * lead_root, gd);
        return true;
    }

    std::string str() const {
        const std::string n = to_string(num_, "q");
        if (is_polynomial() && den_.coeff(0).is_one()) return n;
        return "(" + n + ")/(" + to_string(den_, "q") + ")";
    }

    static const char* field_name() { return "qvar"; }

  private:
    RatPoly num_, den_;

    struct no_normalize {};
    RationalFunction(RatPoly num, RatPoly den, no_normalize)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = RatPoly::constant(Rational(1));
            return;
        }
        RatPoly g = RatPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        const Rational lead_inv = den_.leading().inverse();
        num_ = num_ * lead_inv;
        den_ = den_ * lead_inv;
    }
};

inline bool is_zero_value(const RationalFunction& x) { return x.is_zero(); }

}  // namespace qsl2
