#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hocolim/matrix.hpp"

namespace hocolim {

/// D = U * A * V with U, V invertible and D diagonal. Over Z the diagonal is
/// nonnegative and divisibility-ordered; over a field it is 1,...,1,0,...,0.
template <Ring R>
struct SmithDecomposition {
    Matrix<R> U;
    Matrix<R> D;
    Matrix<R> V;
    std::size_t rank = 0;

    std::vector<typename R::value_type> diagonal() const {
        std::vector<typename R::value_type> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

// Elimination state. The inverse transforms are tracked alongside U and V so
// that callers can split off images and kernels without a second reduction.
template <Ring R>
struct SmithState {
    using T = typename R::value_type;

    Matrix<R> A;
    std::optional<Matrix<R>> U, Uinv, V, Vinv;
    std::size_t rank = 0;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_rows(i, j);
        if (U) U->swap_rows(i, j);
        if (Uinv) Uinv->swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_cols(i, j);
        if (V) V->swap_cols(i, j);
        if (Vinv) Vinv->swap_rows(i, j);
    }
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const T& f) {
        A.add_row_multiple(i, j, f);
        if (U) U->add_row_multiple(i, j, f);
        if (Uinv) Uinv->add_col_multiple(j, i, A.ring().neg(f));
    }
    // col_i += f * col_j
    void add_col(std::size_t i, std::size_t j, const T& f) {
        A.add_col_multiple(i, j, f);
        if (V) V->add_col_multiple(i, j, f);
        if (Vinv) Vinv->add_row_multiple(j, i, A.ring().neg(f));
    }
    void scale_row(std::size_t i, const T& unit) {
        A.scale_row(i, unit);
        if (U) U->scale_row(i, unit);
        if (Uinv) Uinv->scale_col(i, A.ring().unit_inverse(unit));
    }

    void run() {
        const R& ring = A.ring();
        const std::size_t m = A.rows(), n = A.cols();
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            // Minimal-norm pivot over the trailing block; first hit in
            // row-major order wins ties.
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (ring.is_zero(A(i, j))) continue;
                    if (!pivot || ring.smaller_norm(A(i, j), A(pivot->first, pivot->second))) pivot = {i, j};
                }
            if (!pivot) break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);

            while (true) {
                // Bring the smallest entry of row t / column t to (t, t).
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (!ring.is_zero(A(i, t)) && ring.smaller_norm(A(i, t), A(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!ring.is_zero(A(t, j)) && ring.smaller_norm(A(t, j), A(bi, bj))) bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);

                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (ring.is_zero(A(i, t))) continue;
                    add_row(i, t, ring.neg(ring.divmod(A(i, t), A(t, t)).first));
                    if (!ring.is_zero(A(i, t))) clean = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (ring.is_zero(A(t, j))) continue;
                    add_col(j, t, ring.neg(ring.divmod(A(t, j), A(t, t)).first));
                    if (!ring.is_zero(A(t, j))) clean = false;
                }
                if (!clean) continue;

                if constexpr (!R::is_field) {
                    // Enforce d_t | every later entry, hence the divisor chain.
                    std::optional<std::size_t> bad_row;
                    for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                        for (std::size_t j = t + 1; j < n; ++j) {
                            if (ring.is_zero(A(i, j))) continue;
                            if (!ring.is_zero(ring.divmod(A(i, j), A(t, t)).second)) {
                                bad_row = i;
                                break;
                            }
                        }
                    if (bad_row) {
                        add_row(t, *bad_row, ring.one());
                        continue;
                    }
                }
                break;
            }
            scale_row(t, ring.normalizer(A(t, t)));
            rank = t + 1;
        }
    }
};

template <Ring R>
SmithState<R> reduce(const Matrix<R>& a, bool left, bool left_inverse, bool right, bool right_inverse) {
    SmithState<R> s{a, std::nullopt, std::nullopt, std::nullopt, std::nullopt, 0};
    if (left) s.U = Matrix<R>::identity(a.ring(), a.rows());
    if (left_inverse) s.Uinv = Matrix<R>::identity(a.ring(), a.rows());
    if (right) s.V = Matrix<R>::identity(a.ring(), a.cols());
    if (right_inverse) s.Vinv = Matrix<R>::identity(a.ring(), a.cols());
    s.run();
    return s;
}

} // namespace detail

/// Smith normal form with deterministic minimal-norm pivoting.
template <Ring R>
SmithDecomposition<R> smith_normal_form(const Matrix<R>& a) {
    auto s = detail::reduce(a, true, false, true, false);
    return {std::move(*s.U), std::move(s.A), std::move(*s.V), s.rank};
}

/// Diagonal of the Smith form only (no transforms are accumulated).
template <Ring R>
std::vector<typename R::value_type> elementary_divisors(const Matrix<R>& a) {
    auto s = detail::reduce(a, false, false, false, false);
    std::vector<typename R::value_type> d;
    for (std::size_t i = 0; i < s.rank; ++i) d.push_back(s.A(i, i));
    return d;
}

/// Rank over the fraction field.
template <Ring R>
std::size_t rank(const Matrix<R>& a) {
    return detail::reduce(a, false, false, false, false).rank;
}

/// Columns form a basis of ker(A); a (cols x 0) matrix when A is injective.
template <Ring R>
Matrix<R> kernel_basis(const Matrix<R>& a) {
    auto s = detail::reduce(a, false, false, true, false);
    return s.V->columns(s.rank, a.cols() - s.rank);
}

/// A free submodule S of R^m that is a direct summand, with a chosen
/// complement. `basis` (m x r) spans S, `complement` (m x (m-r)) spans the
/// complement, and `retraction`, `quotient` are the matching coordinate maps:
///   retraction * basis = I, retraction * complement = 0,
///   quotient * complement = I, quotient * basis = 0.
/// `quotient` therefore presents R^m / S in complement coordinates.
template <Ring R>
struct Summand {
    Matrix<R> basis;
    Matrix<R> retraction;
    Matrix<R> complement;
    Matrix<R> quotient;

    std::size_t ambient() const { return basis.rows(); }
    std::size_t rank() const { return basis.cols(); }
};

/// ker(A) as a summand of the source. Kernels of maps between free modules
/// over a PID are saturated, so this never fails.
template <Ring R>
Summand<R> kernel_summand(const Matrix<R>& a) {
    auto s = detail::reduce(a, false, false, true, true);
    const std::size_t n = a.cols(), r = s.rank;
    return {s.V->columns(r, n - r), s.Vinv->row_range(r, n - r), s.V->columns(0, r), s.Vinv->row_range(0, r)};
}

/// The column span of B as a summand of R^rows(B). Throws an Invariant error
/// when the span is not saturated (some elementary divisor is not a unit),
/// since then no complement exists.
template <Ring R>
Summand<R> span_summand(const Matrix<R>& b) {
    auto s = detail::reduce(b, true, true, false, false);
    const std::size_t m = b.rows(), r = s.rank;
    for (std::size_t i = 0; i < r; ++i)
        ensure(b.ring().is_unit(s.A(i, i)), "column span is not a direct summand (elementary divisor " +
                                                b.ring().to_string(s.A(i, i)) + ")");
    return {s.Uinv->columns(0, r), s.U->row_range(0, r), s.Uinv->columns(r, m - r), s.U->row_range(r, m - r)};
}

/// Whether every column of `v` is an R-linear combination of the columns of `g`.
template <Ring R>
bool in_column_span(const Matrix<R>& g, const Matrix<R>& v) {
    const R& ring = g.ring();
    if (g.cols() == 0) return v.is_zero();
    const auto snf = smith_normal_form(g);
    const auto w = snf.U * v;
    for (std::size_t j = 0; j < w.cols(); ++j)
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i >= snf.rank) {
                if (!ring.is_zero(w(i, j))) return false;
            } else if (!ring.is_zero(ring.divmod(w(i, j), snf.D(i, i)).second)) {
                return false;
            }
        }
    return true;
}

/// True when the square matrix is invertible over its ring.
template <Ring R>
bool is_unimodular(const Matrix<R>& a) {
    if (a.rows() != a.cols()) return false;
    auto d = elementary_divisors(a);
    if (d.size() != a.rows()) return false;
    for (const auto& x : d)
        if (!a.ring().is_unit(x)) return false;
    return true;
}

} // namespace hocolim
