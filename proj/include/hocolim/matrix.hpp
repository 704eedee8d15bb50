#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "hocolim/error.hpp"
#include "hocolim/ring.hpp"

namespace hocolim {

/// Dense row-major matrix over a coefficient ring. A map of based free
/// modules R^m -> R^n is an n x m matrix acting on column vectors.
template <Ring R>
class Matrix {
public:
    using value_type = typename R::value_type;

    Matrix() = default;

    Matrix(R ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

    static Matrix zero(const R& ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

    static Matrix identity(const R& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    /// Entries given as integers, reduced into the ring.
    static Matrix from_integers(const R& ring, const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
        Matrix m(ring, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) fail(ErrorKind::Shape, "ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.from_integer(rows[i][j]);
        }
        return m;
    }

    static Matrix from_integers(const R& ring, std::initializer_list<std::initializer_list<long long>> rows) {
        std::vector<std::vector<Integer>> v;
        for (const auto& row : rows) {
            auto& out = v.emplace_back();
            for (long long x : row) out.emplace_back(x);
        }
        return from_integers(ring, v);
    }

    const R& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? ring_.one() : ring_.zero())) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_same_ring(a, b);
        if (a.cols_ != b.rows_)
            fail(ErrorKind::Shape, "cannot multiply " + a.shape() + " by " + b.shape());
        const R& ring = a.ring_;
        Matrix c(ring, a.rows_, b.cols_);
        // Zero entries are skipped on both sides.
        std::vector<std::vector<std::size_t>> nonzero(b.rows_);
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!ring.is_zero(b(k, j))) nonzero[k].push_back(j);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type& aik = a(i, k);
                if (ring.is_zero(aik)) continue;
                for (std::size_t j : nonzero[k]) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
            }
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.ring_.add(a.data_[k], b.data_[k]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.ring_.sub(a.data_[k], b.data_[k]);
        return c;
    }

    Matrix operator-() const {
        Matrix c = *this;
        for (auto& x : c.data_) x = ring_.neg(x);
        return c;
    }

    Matrix scaled(const value_type& s) const {
        Matrix c = *this;
        for (auto& x : c.data_) x = ring_.mul(s, x);
        return c;
    }

    /// Multiplies by (-1)^k.
    Matrix signed_by(long long k) const { return (k % 2 == 0) ? *this : -*this; }

    Matrix transpose() const {
        Matrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
        if (row0 + nrows > rows_ || col0 + ncols > cols_) fail(ErrorKind::Shape, "block out of range of " + shape());
        Matrix b(ring_, nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
        return b;
    }

    void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
        if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_)
            fail(ErrorKind::Shape, "cannot place " + b.shape() + " block into " + shape());
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
    }

    void add_block(std::size_t row0, std::size_t col0, const Matrix& b) {
        if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_)
            fail(ErrorKind::Shape, "cannot add " + b.shape() + " block into " + shape());
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!ring_.is_zero(b(i, j))) (*this)(row0 + i, col0 + j) = ring_.add((*this)(row0 + i, col0 + j), b(i, j));
    }

    Matrix columns(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }
    Matrix row_range(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }

    // Row operations used by elimination; the same operations on columns follow.
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    /// row_target += factor * row_source
    void add_row_multiple(std::size_t target, std::size_t source, const value_type& factor) {
        if (ring_.is_zero(factor)) return;
        for (std::size_t c = 0; c < cols_; ++c) {
            const value_type& s = (*this)(source, c);
            if (!ring_.is_zero(s)) (*this)(target, c) = ring_.add((*this)(target, c), ring_.mul(factor, s));
        }
    }
    /// col_target += factor * col_source
    void add_col_multiple(std::size_t target, std::size_t source, const value_type& factor) {
        if (ring_.is_zero(factor)) return;
        for (std::size_t r = 0; r < rows_; ++r) {
            const value_type& s = (*this)(r, source);
            if (!ring_.is_zero(s)) (*this)(r, target) = ring_.add((*this)(r, target), ring_.mul(factor, s));
        }
    }
    void scale_row(std::size_t i, const value_type& u) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = ring_.mul(u, (*this)(i, c));
    }
    void scale_col(std::size_t j, const value_type& u) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = ring_.mul(u, (*this)(r, j));
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::ostringstream out;
        out << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            out << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << ring_.to_string((*this)(i, j));
            out << ']';
        }
        out << ']';
        return out.str();
    }

private:
    static void check_same_ring(const Matrix& a, const Matrix& b) {
        if (!(a.ring_ == b.ring_)) fail(ErrorKind::RingMismatch, "matrices over " + a.ring_.name() + " and " + b.ring_.name());
    }
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        check_same_ring(a, b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::Shape, "shape mismatch " + a.shape() + " vs " + b.shape());
    }

    R ring_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// [A B] side by side.
template <Ring R>
Matrix<R> hstack(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::Shape, "hstack of " + a.shape() + " and " + b.shape());
    Matrix<R> m(a.ring(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

/// [A; B] stacked.
template <Ring R>
Matrix<R> vstack(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.cols() != b.cols()) fail(ErrorKind::Shape, "vstack of " + a.shape() + " and " + b.shape());
    Matrix<R> m(a.ring(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

/// Block-diagonal sum diag(A, B).
template <Ring R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
    Matrix<R> m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

/// Kronecker product A (x) B with row index (i, k) -> i * rows(B) + k.
template <Ring R>
Matrix<R> kronecker(const Matrix<R>& a, const Matrix<R>& b) {
    const R& ring = a.ring();
    Matrix<R> m(ring, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (ring.is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
        }
    return m;
}

} // namespace hocolim
