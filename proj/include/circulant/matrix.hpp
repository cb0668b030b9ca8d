#pragma once

// Dense row-major matrices over an exact scalar or polynomial type, plus the
// fraction-free Bareiss determinant used as an independent cross-check.

#include <cstddef>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ConfigError("Matrix::operator*: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
                }
            }
        }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("Matrix::operator+: shape mismatch");
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw ConfigError("Matrix::apply: shape mismatch");
        std::vector<T> r(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            T acc{};
            for (size_t j = 0; j < cols_; ++j) {
                if (!(at(i, j) == T())) acc = acc + at(i, j) * v[j];
            }
            r[i] = acc;
        }
        return r;
    }

    T trace() const {
        if (rows_ != cols_) throw ConfigError("Matrix::trace: not square");
        T acc{};
        for (size_t i = 0; i < rows_; ++i) acc = acc + at(i, i);
        return acc;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // e >= 1; binary powering without needing a multiplicative identity.
    Matrix pow(unsigned long e) const {
        if (rows_ != cols_) throw ConfigError("Matrix::pow: not square");
        if (e == 0) throw ConfigError("Matrix::pow: exponent must be >= 1");
        int top = 63;
        while (((e >> top) & 1) == 0) --top;
        Matrix r = *this;
        for (int b = top - 1; b >= 0; --b) {
            r = r * r;
            if ((e >> b) & 1) r = r * *this;
        }
        return r;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

private:
    size_t rows_, cols_;
    std::vector<T> d_;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<IntPoly>;

// tr(A^d) without forming the full power when d splits, d >= 1.
template <class T>
T trace_of_power(const Matrix<T>& a, unsigned long d) {
    if (d == 1) return a.trace();
    unsigned long h = d / 2;
    Matrix<T> left = a.pow(h);
    Matrix<T> right = (d - h == h) ? left : a.pow(d - h);
    T acc{};
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) acc = acc + left.at(i, k) * right.at(k, i);
    return acc;
}

// Fraction-free Gaussian elimination; exact over the integers.
inline BigInt bareiss_determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw ConfigError("bareiss_determinant: not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

} // namespace circulant
