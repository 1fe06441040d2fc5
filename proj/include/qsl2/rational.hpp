#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers, GMP-backed.
 *
 * All field element types in this library share one interface: default
 * construction gives zero, integer constants may be created untagged and
 * adopt field parameters on contact, and `zero()/one()/from_int()` produce
 * constants carrying the same field parameters as `*this`. Rationals have
 * no runtime parameters, so the tag machinery is trivial here.
 */

#include <gmpxx.h>

#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace qsl2 {

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d) : v_(n, d) {
        if (sgn(d) == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long c) const { return Rational(c); }
    Rational from_integer(const Integer& c) const { return Rational(c); }
    Rational from_rational(const Rational& c) const { return c; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    const mpq_class& value() const { return v_; }
    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Exact square root when one exists in Q.
    bool square_root(Rational& out) const {
        if (sgn(v_) < 0) return false;
        Integer rn, rd;
        if (!perfect_square_root(numerator(), rn)) return false;
        if (!perfect_square_root(denominator(), rd)) return false;
        out = Rational(rn, rd);
        return true;
    }

    std::string str() const { return v_.get_str(); }

    static const char* field_name() { return "rational"; }

  private:
    mpq_class v_;
};

inline bool is_zero_value(const Rational& x) { return x.is_zero(); }

}  // namespace qsl2
