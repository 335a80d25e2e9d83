#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "omalous/error.hpp"

namespace omalous::exact {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    /// Builds from nested rows; every row must have the same length.
    explicit ExactMatrix(const std::vector<std::vector<T>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DomainError("ShapeMismatch", "ragged matrix rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transpose() const {
        ExactMatrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) out.data_.push_back((*this)(r, c));
        }
        return out;
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

/// In-place row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_echelon(ExactMatrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        const T inv = one_like(m(row, col)) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Exact rank by Gaussian elimination.
template <class T>
std::size_t rank(ExactMatrix<T> m) {
    return detail::row_echelon(m).size();
}

/// Solves the square system m x = b. Throws DomainError("SingularMatrix").
template <class T>
std::vector<T> solve(const ExactMatrix<T>& m, const std::vector<T>& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw DomainError("ShapeMismatch", "solve needs a square system");
    if (n == 0) return {};
    ExactMatrix<T> aug(n, n + 1, b.front());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    const auto pivots = detail::row_echelon(aug);
    if (pivots.size() < n || pivots.back() >= n) throw DomainError("SingularMatrix", "matrix is singular");
    std::vector<T> x(n, b.front());
    for (std::size_t r = n; r-- > 0;) {
        T v = aug(r, n);
        for (std::size_t c = r + 1; c < n; ++c) v -= aug(r, c) * x[c];
        x[r] = v;
    }
    return x;
}

}  // namespace omalous::exact
