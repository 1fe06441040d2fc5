#pragma once

// Seeded random element generators shared by the property tests.

#include <random>

#include <qsl2/cyclotomic.hpp>
#include <qsl2/matrix.hpp>
#include <qsl2/numeric.hpp>
#include <qsl2/prime_field.hpp>
#include <qsl2/rational.hpp>
#include <qsl2/rational_function.hpp>

namespace gen {

using Rng = std::mt19937_64;

inline qsl2::Rational rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return qsl2::Rational(num(rng), den(rng));
}

inline qsl2::PrimeField prime_field(Rng& rng, long p) {
    std::uniform_int_distribution<long> v(0, p - 1);
    return qsl2::PrimeField(v(rng), p);
}

inline qsl2::Cyclotomic cyclotomic(Rng& rng, unsigned long n) {
    const unsigned long d = qsl2::euler_phi(n);
    std::uniform_int_distribution<long> c(-4, 4);
    std::vector<qsl2::Rational> coeffs(d);
    for (auto& x : coeffs) x = qsl2::Rational(c(rng));
    return qsl2::Cyclotomic(n, qsl2::RatPoly(std::move(coeffs)));
}

inline qsl2::RationalFunction rational_function(Rng& rng) {
    std::uniform_int_distribution<long> c(-4, 4), d(0, 2);
    auto poly = [&](bool nonzero) {
        std::vector<qsl2::Rational> v(static_cast<std::size_t>(d(rng)) + 1);
        for (auto& x : v) x = qsl2::Rational(c(rng));
        qsl2::RatPoly p(std::move(v));
        if (nonzero && p.is_zero()) p = qsl2::RatPoly::constant(qsl2::Rational(1));
        return p;
    };
    return qsl2::RationalFunction(poly(false), poly(true));
}

template <class K, class ElemGen>
qsl2::Matrix<K> matrix(Rng& rng, std::size_t rows, std::size_t cols, ElemGen elem) {
    qsl2::Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = elem(rng);
    return m;
}

/// Rejection-sample an invertible square matrix.
template <class K, class ElemGen>
qsl2::Matrix<K> invertible_matrix(Rng& rng, std::size_t n, ElemGen elem) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        auto m = matrix<K>(rng, n, n, elem);
        if (m.rank() == n) return m;
    }
    throw std::runtime_error("failed to draw an invertible matrix");
}

}  // namespace gen
