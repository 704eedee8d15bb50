#pragma once

#include <map>
#include <string>
#include <vector>

#include "hocolim/double_complex.hpp"

namespace hocolim {

/// Closed range [lo, hi] of total degrees whose homology is requested.
struct DegreeWindow {
    int lo = 0;
    int hi = 0;

    DegreeWindow() = default;
    DegreeWindow(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) fail(ErrorKind::IndexOutOfRange, "window [" + std::to_string(lo) + "," + std::to_string(hi) + "] is empty");
    }

    std::string to_string() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

    friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

namespace detail {

// Every antidiagonal k + l = n with n in [lo - 1, hi + 1] must avoid the
// unmaterialized columns.
template <Ring R>
void check_antidiagonals(const DoubleComplex<R>& x, const DegreeWindow& w) {
    const auto& t = x.truncation();
    if (!t) return;
    const std::string where = "window " + w.to_string();
    if (!t->rows) fail(ErrorKind::InfiniteAntidiagonal, where + ": rows of the unmaterialized columns are unbounded");
    const auto [rlo, rhi] = *t->rows;
    if (t->side == Truncation::Side::Above && w.hi + 1 - rlo > t->last_known)
        fail(ErrorKind::InfiniteAntidiagonal, where + " meets column " + std::to_string(w.hi + 1 - rlo) +
                                                   " beyond the last materialized column " + std::to_string(t->last_known));
    if (t->side == Truncation::Side::Below && w.lo - 1 - rhi < t->last_known)
        fail(ErrorKind::InfiniteAntidiagonal, where + " meets column " + std::to_string(w.lo - 1 - rhi) +
                                                   " below the last materialized column " + std::to_string(t->last_known));
}

// Degrees lo-1 .. hi+1 of the total complex; blocks ascending in k.
template <Ring R>
ChainComplex<R> totalize(const DoubleComplex<R>& x, const DegreeWindow& w) {
    const R& ring = x.ring();
    std::map<int, std::map<int, std::size_t>> offsets;  // n -> k -> offset
    std::map<int, std::size_t> ranks;
    for (const auto& [b, r] : x.ranks()) {
        const int n = b.first + b.second;
        if (n < w.lo - 1 || n > w.hi + 1) continue;
        offsets[n][b.first] = ranks[n];
        ranks[n] += r;
    }
    std::map<int, Matrix<R>> diffs;
    for (int n = w.lo; n <= w.hi + 1; ++n) {
        if (!ranks.count(n) || !ranks.count(n - 1)) continue;
        Matrix<R> d(ring, ranks[n - 1], ranks[n]);
        const auto& below = offsets[n - 1];
        for (const auto& [k, col] : offsets[n]) {
            const int l = n - k;
            if (auto it = below.find(k - 1); it != below.end()) d.set_block(it->second, col, x.horizontal(k, l));
            if (auto it = below.find(k); it != below.end()) d.set_block(it->second, col, x.vertical(k, l).signed_by(k));
        }
        diffs[n] = d;
    }
    return ChainComplex<R>(ring, ranks, diffs);
}

} // namespace detail

/// Tot^(+): degree n is the sum of X_{k,n-k} (ascending k) with
/// d = d^h + (-1)^k d^v. Degrees lo-1 .. hi+1 are materialized, so homology
/// is exact on [lo, hi].
template <Ring R>
ChainComplex<R> tot_sum(const DoubleComplex<R>& x, const DegreeWindow& w) {
    detail::check_antidiagonals(x, w);
    return detail::totalize(x, w);
}

/// Tot^Pi. Every materialized antidiagonal is finite, where products and sums
/// agree, so the matrices coincide with tot_sum; what differs is which
/// truncations are admissible, and an antidiagonal that cannot be shown
/// finite is refused.
template <Ring R>
ChainComplex<R> tot_prod(const DoubleComplex<R>& x, const DegreeWindow& w) {
    detail::check_antidiagonals(x, w);
    return detail::totalize(x, w);
}

/// Tot of a double map on the window of `w`.
template <Ring R>
ChainMap<R> tot_sum(const DoubleMap<R>& f, const DegreeWindow& w) {
    const auto s = tot_sum(f.source(), w);
    const auto t = tot_sum(f.target(), w);
    const R& ring = s.ring();
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : s.ranks()) {
        Matrix<R> m(ring, t.rank(n), r);
        std::size_t col = 0;
        for (const auto& [b, rb] : f.source().ranks()) {
            if (b.first + b.second != n) continue;
            std::size_t row = 0;
            for (const auto& [c, rc] : f.target().ranks()) {
                if (c.first + c.second != n) continue;
                if (c == b) m.set_block(row, col, f.component(b));
                row += rc;
            }
            col += rb;
        }
        comps[n] = m;
    }
    return ChainMap<R>(s, t, comps);
}

/// Homology of a windowed total complex on [lo, hi].
template <Ring R>
std::map<int, HomologyGroup> window_homology(const ChainComplex<R>& total, const DegreeWindow& w) {
    return homology_range(total, w.lo, w.hi);
}

enum class StaircaseCut { Rows, Columns };

/// Finite pieces of the second-quadrant staircase
///   c_j in (-j, j),  e_j in (-j-1, j),  j >= 0,
///   d^h c_j = e_j,  d^v c_{j+1} = e_j.
/// Every row is acyclic, so X -> 0 is a rowwise quasi-isomorphism, yet the
/// full Tot^Pi has H_0 = Z (the alternating sequence (1, -1, 1, ...) of c's is
/// a cycle) while Tot^(+) is acyclic.
///
/// Rows: keep rows 0..depth; the total complex is acyclic.
/// Columns: keep columns -depth..0; H_0 = Z.
/// With `open` set the Rows piece is marked as unbounded below, which
/// totalization refuses.
template <Ring R>
DoubleComplex<R> staircase(const R& ring, int depth, StaircaseCut cut, bool open = false) {
    std::map<Bidegree, std::size_t> ranks;
    std::map<Bidegree, Matrix<R>> h, v;
    const auto one = Matrix<R>::identity(ring, 1);
    auto keep = [&](int k, int l) {
        return cut == StaircaseCut::Rows ? (l >= 0 && l <= depth) : (k >= -depth && k <= 0);
    };
    for (int j = 0; j <= depth + 1; ++j) {
        if (keep(-j, j)) ranks[{-j, j}] = 1;
        if (keep(-j - 1, j)) ranks[{-j - 1, j}] = 1;
    }
    for (int j = 0; j <= depth + 1; ++j) {
        if (ranks.count({-j, j}) && ranks.count({-j - 1, j})) h[{-j, j}] = one;
        if (j >= 1 && ranks.count({-j, j}) && ranks.count({-j, j - 1})) v[{-j, j}] = one;
    }
    std::optional<Truncation> t;
    if (open) t = Truncation{Truncation::Side::Below, -depth - 1, std::nullopt};
    return DoubleComplex<R>(ring, ranks, h, v, t);
}

} // namespace hocolim
