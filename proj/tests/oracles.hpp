#pragma once

// Test-only brute-force oracles. Nothing here calls into the Smith form or
// the homology code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hocolim/chain_complex.hpp"
#include "hocolim/matrix.hpp"

namespace oracle {

using hocolim::Integer;
using hocolim::Integers;
using hocolim::Matrix;

/// Fraction-free Bareiss determinant.
inline Integer determinant(Matrix<Integers> a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Determinantal divisors: entry k-1 is the gcd of all k x k minors, listed
/// while nonzero. Their successive quotients are the invariant factors.
inline std::vector<Integer> determinantal_divisors(const Matrix<Integers>& a) {
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(a.rows(), k, 0, cur, rs);
        subsets(a.cols(), k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Matrix<Integers> minor(Integers{}, k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(r[i], c[j]);
                g = gcd(g, abs(determinant(minor)));
            }
        if (g == 0) break;
        out.push_back(g);
    }
    return out;
}

/// Integer column echelon form by Euclidean column operations:
/// a * transform = echelon, transform unimodular. Pivot rows strictly
/// increase with the column index; columns past `rank` are zero.
struct ColumnEchelon {
    Matrix<Integers> echelon;
    Matrix<Integers> transform;
    std::vector<std::size_t> pivot_rows;
};

inline ColumnEchelon column_echelon(const Matrix<Integers>& a) {
    Matrix<Integers> e = a;
    Matrix<Integers> t = Matrix<Integers>::identity(Integers{}, a.cols());
    std::vector<std::size_t> pivots;
    std::size_t c = 0;
    for (std::size_t r = 0; r < a.rows() && c < a.cols(); ++r) {
        while (true) {
            std::size_t best = a.cols();
            for (std::size_t j = c; j < a.cols(); ++j)
                if (e(r, j) != 0 && (best == a.cols() || abs(e(r, j)) < abs(e(r, best)))) best = j;
            if (best == a.cols()) break;
            e.swap_cols(c, best);
            t.swap_cols(c, best);
            bool done = true;
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                if (e(r, j) == 0) continue;
                Integer q = e(r, j) / e(r, c);
                e.add_col_multiple(j, c, -q);
                t.add_col_multiple(j, c, -q);
                if (e(r, j) != 0) done = false;
            }
            if (done) {
                pivots.push_back(r);
                ++c;
                break;
            }
        }
    }
    return {e, t, pivots};
}

/// Columns spanning the integer kernel of a.
inline Matrix<Integers> kernel(const Matrix<Integers>& a) {
    auto ce = column_echelon(a);
    const std::size_t r = ce.pivot_rows.size();
    return ce.transform.columns(r, a.cols() - r);
}

/// Whether v (a column) lies in the Z-span of the columns of g.
inline bool in_span(Matrix<Integers> v, const Matrix<Integers>& g) {
    if (g.cols() == 0) return v.is_zero();
    auto ce = column_echelon(g);
    for (std::size_t j = 0; j < ce.pivot_rows.size(); ++j) {
        const std::size_t r = ce.pivot_rows[j];
        for (std::size_t i = 0; i < r; ++i)
            if (v(i, 0) != 0) return false;
        if (v(r, 0) % ce.echelon(r, j) != 0) return false;
        Integer q = v(r, 0) / ce.echelon(r, j);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) -= q * ce.echelon(i, j);
    }
    return v.is_zero();
}

/// Whether every column of a lies in the span of the columns of g.
inline bool contained(const Matrix<Integers>& a, const Matrix<Integers>& g) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!in_span(a.columns(j, 1), g)) return false;
    return true;
}

/// y with g * y = v, for g of full column rank and v in its span.
inline Matrix<Integers> coordinates(Matrix<Integers> v, const Matrix<Integers>& g) {
    auto ce = column_echelon(g);
    Matrix<Integers> y(Integers{}, g.cols(), 1);
    for (std::size_t j = 0; j < ce.pivot_rows.size(); ++j) {
        const std::size_t r = ce.pivot_rows[j];
        y(j, 0) = v(r, 0) / ce.echelon(r, j);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) -= y(j, 0) * ce.echelon(i, j);
    }
    return ce.transform * y;
}

inline Matrix<Integers> transpose(const Matrix<Integers>& a) {
    Matrix<Integers> t(Integers{}, a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline bool monomial(const Matrix<Integers>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (k != j && a(i, k) != 0) return false;
            for (std::size_t k = 0; k < a.rows(); ++k)
                if (k != i && a(k, j) != 0) return false;
        }
    return true;
}

/// Invariant factors (nonzero ones, in divisor-chain order) by alternating
/// column and row echelon forms until at most one entry per row and column
/// survives, then gcd/lcm normalization of those entries. Polynomial, unlike
/// `determinantal_divisors`, which it is checked against on small inputs.
inline std::vector<Integer> invariant_factors(Matrix<Integers> a) {
    while (!monomial(a)) a = transpose(column_echelon(transpose(column_echelon(a).echelon)).echelon);
    std::vector<Integer> d;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) d.push_back(abs(a(i, j)));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const Integer g = gcd(d[i], d[j]);
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    return d;
}

/// H_n by kernel coordinates and invariant factors of the boundaries.
inline hocolim::HomologyGroup homology(const hocolim::ChainComplex<Integers>& c, int n) {
    Matrix<Integers> z = c.rank(n - 1) > 0 ? kernel(c.differential(n)) : Matrix<Integers>::identity(Integers{}, c.rank(n));
    const std::size_t k = z.cols();
    hocolim::HomologyGroup h;
    if (k == 0) return h;
    const auto b = c.differential(n + 1);
    Matrix<Integers> x(Integers{}, k, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) x.set_block(0, j, coordinates(b.columns(j, 1), z));
    const auto factors = invariant_factors(x);
    for (const auto& d : factors)
        if (d > 1) h.torsion.push_back(d);
    h.free_rank = k - factors.size();
    return h;
}

/// Quasi-isomorphism decided degreewise: H_n(S) and H_n(T) are isomorphic
/// groups and H_n(f) is onto (cycles of T lie in f(cycles of S) + boundaries).
/// A surjection between isomorphic finitely generated groups is bijective.
inline bool quasi_iso_degreewise(const hocolim::ChainMap<Integers>& f) {
    const auto& s = f.source();
    const auto& t = f.target();
    for (int n : f.degrees()) {
        if (!(homology(s, n) == homology(t, n))) return false;
        if (t.rank(n) == 0) continue;
        Matrix<Integers> zs = s.rank(n - 1) > 0 ? kernel(s.differential(n)) : Matrix<Integers>::identity(Integers{}, s.rank(n));
        Matrix<Integers> zt = t.rank(n - 1) > 0 ? kernel(t.differential(n)) : Matrix<Integers>::identity(Integers{}, t.rank(n));
        const auto gens = hstack(f.component(n) * zs, t.differential(n + 1));
        if (!contained(zt, gens)) return false;
    }
    return true;
}

} // namespace oracle
