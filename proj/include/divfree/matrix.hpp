#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "divfree/rational.hpp"

namespace divfree {

// Dense matrix of exact rationals. Elimination always picks the first nonzero
// pivot in column order, so rank/RREF/nullspace results are reproducible
// bit-for-bit.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pr = row;
            while (pr < rows_ && (*this)(pr, col) == 0) ++pr;
            if (pr == rows_) continue;
            if (pr != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pr, c), (*this)(row, c));
            const Rational inv = 1 / (*this)(row, col);
            for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || (*this)(r, col) == 0) continue;
                const Rational f = (*this)(r, col);
                for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        RationalMatrix tmp(*this);
        return tmp.rref().size();
    }

    // Canonical kernel basis: one vector per free column, with a 1 in the free
    // slot and RREF back-substitution elsewhere.
    std::vector<std::vector<Rational>> nullspace() const {
        RationalMatrix tmp(*this);
        std::vector<std::size_t> pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[free_col] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -tmp(i, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
        RationalMatrix tmp(*this);
        Rational det(1);
        for (std::size_t col = 0, row = 0; col < cols_; ++col, ++row) {
            std::size_t pr = row;
            while (pr < rows_ && tmp(pr, col) == 0) ++pr;
            if (pr == rows_) return Rational(0);
            if (pr != row) {
                for (std::size_t c = 0; c < cols_; ++c) std::swap(tmp(pr, c), tmp(row, c));
                det = -det;
            }
            det *= tmp(row, col);
            const Rational inv = 1 / tmp(row, col);
            for (std::size_t r = row + 1; r < rows_; ++r) {
                if (tmp(r, col) == 0) continue;
                const Rational f = tmp(r, col) * inv;
                for (std::size_t c = col; c < cols_; ++c) tmp(r, c) -= f * tmp(row, c);
            }
        }
        return det;
    }

    bool is_invertible() const { return rows_ == cols_ && determinant() != 0; }

    RationalMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
        RationalMatrix aug(rows_, 2 * cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
            aug(r, cols_ + r) = 1;
        }
        if (aug.rref().size() != rows_) throw std::domain_error("matrix is singular");
        RationalMatrix inv(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
        return inv;
    }

    RationalMatrix operator*(const RationalMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
        RationalMatrix out(rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(r, k) == 0) continue;
                for (std::size_t c = 0; c < other.cols_; ++c)
                    out(r, c) += (*this)(r, k) * other(k, c);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace divfree
