#pragma once

/**
 * @file prime_field.hpp
 * @brief The prime field F_p with runtime modulus.
 *
 * Elements carry their modulus. A default-constructed or integer-constructed
 * element is an untagged integer constant (p = 0); it adopts the modulus of
 * the first tagged operand it meets. Arithmetic between elements of distinct
 * primes throws FieldMismatch.
 */

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"
#include "rational.hpp"

namespace qsl2 {

class PrimeField {
  public:
    PrimeField() : v_(0), p_(0) {}
    PrimeField(long c) : v_(c), p_(0) {}
    PrimeField(long c, long p) : v_(c), p_(p) { reduce(); }

    static PrimeField make(long p, long c) { return PrimeField(c, p); }

    bool is_zero() const { return v_ == 0; }
    long modulus() const { return p_; }
    long value() const { return v_; }

    PrimeField zero() const { return PrimeField(0, p_); }
    PrimeField one() const { return PrimeField(1, p_); }
    PrimeField from_int(long c) const { return PrimeField(c, p_); }
    PrimeField from_integer(const Integer& c) const {
        if (p_ == 0) throw FieldMismatch("cannot reduce a big integer without a modulus");
        Integer r = c % Integer(static_cast<long>(p_));
        return PrimeField(mpz_get_si(r.get_mpz_t()), p_);
    }
    PrimeField from_rational(const Rational& c) const {
        return from_integer(c.numerator()) / from_integer(c.denominator());
    }

    PrimeField operator-() const { return PrimeField(-v_, p_); }
    PrimeField operator+(PrimeField o) const { auto [a, b] = merged(*this, o); return PrimeField(a.v_ + b.v_, a.p_); }
    PrimeField operator-(PrimeField o) const { auto [a, b] = merged(*this, o); return PrimeField(a.v_ - b.v_, a.p_); }
    PrimeField operator*(PrimeField o) const { auto [a, b] = merged(*this, o); return PrimeField(a.v_ * b.v_, a.p_); }
    PrimeField operator/(PrimeField o) const { return *this * o.inverse(); }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    PrimeField inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;  // unit integer constants
            throw FieldMismatch("inverse of an untagged prime-field constant");
        }
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            long long quo = r / new_r;
            long long tmp = t - quo * new_t; t = new_t; new_t = tmp;
            tmp = r - quo * new_r; r = new_r; new_r = tmp;
        }
        return PrimeField(static_cast<long>(t), p_);
    }

    bool operator==(const PrimeField& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw FieldMismatch("comparing elements of F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
        auto [a, b] = merged(*this, o);
        return a.v_ == b.v_;
    }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

    std::string str() const {
        if (p_ == 0) return std::to_string(v_);
        return std::to_string(v_) + " mod " + std::to_string(p_);
    }

    static const char* field_name() { return "fp"; }

  private:
    long long v_;
    long long p_;  // 0 = untagged constant

    void reduce() {
        if (p_ != 0) {
            v_ %= p_;
            if (v_ < 0) v_ += p_;
        }
    }

    static std::pair<PrimeField, PrimeField> merged(PrimeField a, PrimeField b) {
        if (a.p_ == 0 && b.p_ != 0) { a.p_ = b.p_; a.reduce(); }
        if (b.p_ == 0 && a.p_ != 0) { b.p_ = a.p_; b.reduce(); }
        if (a.p_ != b.p_)
            throw FieldMismatch("mixing F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
        return {a, b};
    }
};

inline bool is_zero_value(const PrimeField& x) { return x.is_zero(); }

}  // namespace qsl2
