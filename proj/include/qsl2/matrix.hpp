#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices and exact linear algebra.
 *
 * Matrix<T> holds entries of one coefficient ring. Rank and determinant use
 * fraction-free (Bareiss) elimination over Z, Z[x] and Q; the remaining
 * fields use plain Gaussian elimination. Inversion, RREF and nullspace
 * require a field. No floating point anywhere.
 */

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace qsl2 {

// exact division hooks for fraction-free elimination
inline Integer exact_div_value(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Rational exact_div_value(const Rational& a, const Rational& b) { return a / b; }
template <class K>
Poly<K> exact_div_value(const Poly<K>& a, const Poly<K>& b) { return a.exact_div(b); }

inline Integer ring_one(const Integer&) { return Integer(1); }
inline Rational ring_one(const Rational& s) { return s.one(); }
template <class T>
T ring_one(const T& sample) { return sample.one(); }
template <class K>
Poly<K> ring_one(const Poly<K>& sample) {
    return Poly<K>::constant(sample.is_zero() ? K(1) : ring_one(sample.leading()));
}

/// Lift a coefficient of ring C into ring T, borrowing field parameters
/// from a sample value.
template <class C, class T>
T lift_coeff(const T& sample, const C& c) {
    if constexpr (std::is_same_v<C, T>) {
        (void)sample;
        return c;
    } else if constexpr (std::is_same_v<C, Integer>) {
        return sample.from_integer(c);
    } else if constexpr (std::is_same_v<C, Rational>) {
        return sample.from_rational(c);
    } else {
        static_assert(!sizeof(C*), "no coefficient lift available");
    }
}

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        assert(a_.size() == rows_ * cols_);
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n, const T& sample = T{}) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one(sample);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    /// A sample entry carrying field parameters, preferring a nonzero one.
    T sample() const {
        for (const auto& x : a_)
            if (!is_zero_value(x)) return x;
        return a_.empty() ? T{} : a_[0];
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (is_zero_value(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        assert(square());
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // --- rank / determinant ---

    /// Exact rank. Fraction-free elimination for Z and Q, Gaussian
    /// elimination over the field otherwise.
    std::size_t rank() const {
        if constexpr (std::is_same_v<T, Integer>) {
            return bareiss(*this).rank;
        } else if constexpr (std::is_same_v<T, Rational>) {
            return bareiss(to_integer_rows(*this)).rank;
        } else {
            return Matrix(*this).gauss_rank_destructive();
        }
    }

    /// Plain Gaussian-elimination rank (field coefficients); used as a
    /// cross-check against the fraction-free route.
    std::size_t rank_gauss() const { return Matrix(*this).gauss_rank_destructive(); }

    T det() const {
        assert(square());
        if constexpr (std::is_same_v<T, Integer>) {
            return bareiss(*this).det;
        } else {
            // Gaussian elimination with division
            Matrix m(*this);
            T d = ring_one(sample());
            for (std::size_t col = 0, row = 0; col < cols_; ++col, ++row) {
                std::size_t piv = row;
                while (piv < rows_ && is_zero_value(m(piv, col))) ++piv;
                if (piv == rows_) return T{};
                if (piv != row) {
                    m.swap_rows(piv, row);
                    d = -d;
                }
                d = d * m(row, col);
                const T inv = m(row, col).inverse();
                for (std::size_t i = row + 1; i < rows_; ++i) {
                    if (is_zero_value(m(i, col))) continue;
                    const T f = m(i, col) * inv;
                    for (std::size_t j = col; j < cols_; ++j) m(i, j) = m(i, j) - f * m(row, j);
                }
            }
            return d;
        }
    }

    /// Inverse over a field; throws SingularMatrix when det = 0.
    Matrix inverse() const {
        assert(square());
        const std::size_t n = rows_;
        Matrix aug(n, 2 * n);
        const T one = ring_one(sample());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = one;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && is_zero_value(aug(piv, col))) ++piv;
            if (piv == n) throw SingularMatrix();
            if (piv != col) aug.swap_rows(piv, col);
            const T inv = aug(col, col).inverse();
            for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) = aug(col, j) * inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || is_zero_value(aug(i, col))) continue;
                const T f = aug(i, col);
                for (std::size_t j = 0; j < 2 * n; ++j)
                    aug(i, j) = aug(i, j) - f * aug(col, j);
            }
        }
        Matrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
        return r;
    }

    /// Basis of the right kernel { x : Mx = 0 }, over a field.
    std::vector<std::vector<T>> nullspace() const {
        Matrix m(*this);
        const T one = ring_one(sample());
        std::vector<long> pivot_of_col(cols_, -1);
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && is_zero_value(m(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row) m.swap_rows(piv, row);
            const T inv = m(row, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) m(row, j) = m(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || is_zero_value(m(i, col))) continue;
                const T f = m(i, col);
                for (std::size_t j = col; j < cols_; ++j) m(i, j) = m(i, j) - f * m(row, j);
            }
            pivot_of_col[col] = static_cast<long>(row);
            ++row;
        }
        std::vector<std::vector<T>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (pivot_of_col[free_col] >= 0) continue;
            std::vector<T> v(cols_);
            v[free_col] = one;
            for (std::size_t col = 0; col < cols_; ++col) {
                if (pivot_of_col[col] < 0) continue;
                v[col] = -m(static_cast<std::size_t>(pivot_of_col[col]), free_col);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Characteristic polynomial det(xI - M), monic; field coefficients.
    /// Similarity reduction to Hessenberg form, then the principal-minor
    /// recurrence; O(n^3) field operations.
    Poly<T> char_poly() const {
        assert(square());
        const std::size_t n = rows_;
        const T one = ring_one(sample());
        if (n == 0) return Poly<T>::constant(one);

        Matrix h(*this);
        for (std::size_t k = 0; k + 2 < n; ++k) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero_value(h(piv, k))) ++piv;
            if (piv == n) continue;
            if (piv != k + 1) {
                h.swap_rows(piv, k + 1);
                for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
            }
            const T inv = h(k + 1, k).inverse();
            for (std::size_t i = k + 2; i < n; ++i) {
                if (is_zero_value(h(i, k))) continue;
                const T f = h(i, k) * inv;
                for (std::size_t j = 0; j < n; ++j) h(i, j) = h(i, j) - f * h(k + 1, j);
                for (std::size_t j = 0; j < n; ++j) h(j, k + 1) = h(j, k + 1) + f * h(j, i);
            }
        }

        // p_k = (x - h_{k-1,k-1}) p_{k-1}
        //       - sum_m h_{m-1,k-1} (prod_{j=m..k-1} h_{j,j-1}) p_{m-1}
        std::vector<Poly<T>> p{Poly<T>::constant(one)};
        for (std::size_t k = 1; k <= n; ++k) {
            Poly<T> cur =
                Poly<T>{std::vector<T>{-h(k - 1, k - 1), one}} * p[k - 1];
            T subdiag = one;
            for (std::size_t m = k - 1; m >= 1; --m) {
                subdiag = subdiag * h(m, m - 1);
                if (is_zero_value(subdiag)) break;
                cur -= p[m - 1] * (h(m - 1, k - 1) * subdiag);
            }
            p.push_back(std::move(cur));
        }
        assert(p[n].degree() == static_cast<int>(n));
        return p[n];
    }

    /// det(xI - M) by fraction-free elimination over T[x]; used to
    /// cross-check char_poly through an independent route.
    Poly<T> char_poly_bareiss() const {
        assert(square());
        const T one = ring_one(sample());
        Matrix<Poly<T>> xm(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                Poly<T> e = Poly<T>::constant(-(*this)(i, j));
                if (i == j) e += Poly<T>::monomial(one, 1);
                xm(i, j) = std::move(e);
            }
        Poly<T> cp = bareiss(xm).det;
        assert(cp.degree() == static_cast<int>(rows_));
        return cp;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    /// Pivot columns of the row echelon form (field coefficients), in order.
    std::vector<std::size_t> pivot_columns() const {
        Matrix m(*this);
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && is_zero_value(m(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row) m.swap_rows(piv, row);
            const T inv = m(row, col).inverse();
            for (std::size_t i = row + 1; i < rows_; ++i) {
                if (is_zero_value(m(i, col))) continue;
                const T f = m(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    m(i, j) = m(i, j) - f * m(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;

    std::size_t gauss_rank_destructive() {
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && is_zero_value((*this)(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row) swap_rows(piv, row);
            const T inv = (*this)(row, col).inverse();
            for (std::size_t i = row + 1; i < rows_; ++i) {
                if (is_zero_value((*this)(i, col))) continue;
                const T f = (*this)(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            ++row;
        }
        return row;
    }

    static Matrix<Integer> to_integer_rows(const Matrix<Rational>& m) {
        Matrix<Integer> out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer l = 1;
            for (std::size_t j = 0; j < m.cols(); ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Rational x = m(i, j) * Rational(l);
                assert(x.is_integer());
                out(i, j) = x.numerator();
            }
        }
        return out;
    }

    template <class E>
    struct BareissResult {
        std::size_t rank;
        E det;  // valid for square inputs of full elimination; zero if singular
    };

    /// Fraction-free elimination with row pivoting and column skipping.
    /// Works over any integral domain with exact division.
    template <class E>
    static BareissResult<E> bareiss(Matrix<E> m) {
        const std::size_t rows = m.rows(), cols = m.cols();
        E prev = ring_one(m.sample());
        bool negate = false;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t piv = row;
            while (piv < rows && is_zero_value(m(piv, col))) ++piv;
            if (piv == rows) continue;
            if (piv != row) {
                m.swap_rows(piv, row);
                negate = !negate;
            }
            for (std::size_t i = row + 1; i < rows; ++i) {
                for (std::size_t j = col + 1; j < cols; ++j)
                    m(i, j) = exact_div_value(m(i, j) * m(row, col) - m(i, col) * m(row, j), prev);
                m(i, col) = E{};
            }
            prev = m(row, col);
            ++row;
        }
        BareissResult<E> out{row, E{}};
        if (rows == cols && row == rows && rows > 0) {
            out.det = negate ? static_cast<E>(-m(rows - 1, cols - 1)) : m(rows - 1, cols - 1);
        } else if (rows == cols && rows > 0) {
            out.det = E{};
        } else if (rows == 0) {
            out.det = ring_one(m.sample());
        }
        return out;
    }

    template <class>
    friend class Matrix;
};

/// Evaluate a polynomial at a square matrix (Horner); the constant term
/// contributes c * identity. Coefficients are lifted into the matrix ring.
template <class C, class T>
Matrix<T> eval_at_matrix(const Poly<C>& p, const Matrix<T>& a) {
    assert(a.square());
    const std::size_t n = a.rows();
    const T s = a.sample();
    Matrix<T> acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        const T c = lift_coeff(s, p.coeff(static_cast<std::size_t>(i)));
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

}  // namespace qsl2
