#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tqft {

/// Dense square matrix over an exact scalar type (Rational, Integer, CycNum).
/// Scalars without a default value (CycNum) are seeded from `zero`.
template <class T>
class Matrix {
public:
    Matrix(std::size_t n, const T& zero) : n_(n), zero_(zero), data_(n * n, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t size() const { return n_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const T& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        x.check(y);
        Matrix r(x.n_, x.zero_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const T& xik = x(i, k);
                for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        x.check(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] += y.data_[i];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix& y) {
        x.check(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] -= y.data_[i];
        return x;
    }

    template <class S>
    Matrix scaled(const S& s) const {
        Matrix r(*this);
        for (auto& v : r.data_) v *= s;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != n_) throw std::invalid_argument("matrix/vector size mismatch");
        std::vector<T> r(n_, zero_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.data_ == y.data_; }

private:
    void check(const Matrix& other) const {
        if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t n_;
    T zero_;
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant. Every division is exact in the
/// ring generated by the entries; T must provide operator/.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    T previous = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == m.zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k) == m.zero()) ++swap_row;
            if (swap_row == n) return m.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = t / previous;
            }
        }
        previous = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (negate) det = m.zero() - det;
    return det;
}

}  // namespace tqft
