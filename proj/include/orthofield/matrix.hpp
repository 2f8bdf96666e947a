#pragma once

#include "orthofield/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace orthofield {

// Dense row-major square-or-rectangular matrix. Products skip structural
// zeros, which keeps exact-mode ladder algebra cheap.
template <Scalar S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = S(1);
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix& operator+=(const Matrix& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
        return *this;
    }
    Matrix& operator*=(const S& factor) {
        for (auto& x : data_) x *= factor;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& factor) { return a *= factor; }
    friend Matrix operator*(const S& factor, Matrix a) { return a *= factor; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not chain");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& left = a(i, k);
                if (is_zero(left)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const S& right = b(k, j);
                    if (is_zero(right)) continue;
                    out(i, j) += left * right;
                }
            }
        }
        return out;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<S> out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const S& entry = (*this)(i, j);
                if (!is_zero(entry)) out[i] += entry * v[j];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

// Result of an attempted Cholesky factorization H = L L^T.
template <Scalar S>
struct CholeskyResult {
    Matrix<S> lower;
    std::vector<S> pivots;  // squared diagonal of L, in elimination order
    int failed_at = -1;     // index of the first non-positive pivot, -1 on success
};

// Factorizes a symmetric matrix. A pivot counts as non-positive when it is
// <= 0 exactly (Surd) or <= relative_floor * its own diagonal entry (Real),
// which keeps the test invariant under diagonal rescaling.
template <Scalar S>
CholeskyResult<S> cholesky(const Matrix<S>& h, double relative_floor = kPivotFloor) {
    const std::size_t n = h.rows();
    CholeskyResult<S> out{Matrix<S>(n, n), {}, -1};
    for (std::size_t j = 0; j < n; ++j) {
        S pivot = h(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= out.lower(j, k) * out.lower(j, k);
        out.pivots.push_back(pivot);
        bool degenerate = false;
        if constexpr (is_exact_v<S>) {
            degenerate = !is_positive(pivot);
        } else {
            degenerate = pivot <= relative_floor * h(j, j);
        }
        if (degenerate) {
            out.failed_at = static_cast<int>(j);
            return out;
        }
        S diagonal = square_root(pivot);
        out.lower(j, j) = diagonal;
        for (std::size_t i = j + 1; i < n; ++i) {
            S sum = h(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= out.lower(i, k) * out.lower(j, k);
            out.lower(i, j) = sum / diagonal;
        }
    }
    return out;
}

// Inverse of a nonsingular lower-triangular matrix by forward substitution.
template <Scalar S>
Matrix<S> invert_lower(const Matrix<S>& lower) {
    const std::size_t n = lower.rows();
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        inv(i, i) = S(1) / lower(i, i);
        for (std::size_t j = 0; j < i; ++j) {
            S sum(0);
            for (std::size_t k = j; k < i; ++k) sum += lower(i, k) * inv(k, j);
            inv(i, j) = -sum / lower(i, i);
        }
    }
    return inv;
}

}  // namespace orthofield
