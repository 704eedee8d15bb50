#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hocolim/chain_complex.hpp"
#include "hocolim/double_complex.hpp"

// Seeded generators for random complexes and maps. Draws go through
// `uniform` (plain modular reduction of mt19937_64 output) so sequences are
// identical on every standard library.

namespace hocolim::random {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng() % span);
}

inline bool coin(Rng& rng) { return (rng() & 1) != 0; }

template <Ring R>
struct BasisChange {
    Matrix<R> forward;
    Matrix<R> inverse;
};

/// Product of random elementary matrices with small multipliers, and its inverse.
template <Ring R>
BasisChange<R> unimodular(Rng& rng, const R& ring, std::size_t n, int steps = 6) {
    BasisChange<R> p{Matrix<R>::identity(ring, n), Matrix<R>::identity(ring, n)};
    if (n < 2) {
        if (n == 1 && coin(rng)) {
            p.forward.scale_row(0, ring.neg(ring.one()));
            p.inverse.scale_col(0, ring.neg(ring.one()));
        }
        return p;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
        if (j >= i) ++j;
        if (uniform(rng, 0, 3) == 0) {
            p.forward.swap_rows(i, j);
            p.inverse.swap_cols(i, j);
            continue;
        }
        long long f = uniform(rng, -2, 1);
        if (f >= 0) ++f;
        const auto v = ring.from_integer(f);
        p.forward.add_row_multiple(i, j, v);
        p.inverse.add_col_multiple(j, i, ring.neg(v));
    }
    return p;
}

/// One basis change per degree of a complex.
template <Ring R>
std::map<int, BasisChange<R>> basis_changes(Rng& rng, const ChainComplex<R>& c) {
    std::map<int, BasisChange<R>> out;
    for (const auto& [n, r] : c.ranks()) out.emplace(n, unimodular(rng, c.ring(), r));
    return out;
}

/// The same complex written in the bases given by `p`: d'_n = P_{n-1} d_n P_n^{-1}.
template <Ring R>
ChainComplex<R> conjugate(const ChainComplex<R>& c, const std::map<int, BasisChange<R>>& p) {
    std::map<int, Matrix<R>> diffs;
    for (const auto& [n, d] : c.differentials()) diffs[n] = p.at(n - 1).forward * d * p.at(n).inverse;
    return ChainComplex<R>(c.ring(), c.ranks(), diffs);
}

/// Direct sum of elementary pieces R[n] and (R --x m--> R) in degrees n, n-1,
/// with every degree inside [lo, hi] of rank at most max_rank, followed by a
/// random change of basis in each degree.
template <Ring R>
ChainComplex<R> complex(Rng& rng, const R& ring, int lo, int hi, std::size_t max_rank) {
    static constexpr long long multipliers[] = {1, 1, 2, 3, 4, 6, 0};
    std::vector<ChainComplex<R>> pieces;
    std::map<int, std::size_t> used;
    const long long attempts = uniform(rng, 0, 2 * (hi - lo + 1));
    for (long long a = 0; a < attempts; ++a) {
        const int n = static_cast<int>(uniform(rng, lo, hi));
        if (used[n] >= max_rank) continue;
        if (n > lo && used[n - 1] < max_rank && coin(rng)) {
            const auto m = multipliers[uniform(rng, 0, 6)] * (coin(rng) ? 1 : -1);
            pieces.push_back(ChainComplex<R>::two_term(Matrix<R>::from_integers(ring, {{m}}), n));
            ++used[n];
            ++used[n - 1];
        } else {
            pieces.push_back(ChainComplex<R>::free(ring, n));
            ++used[n];
        }
    }
    if (pieces.empty()) return ChainComplex<R>::zero(ring);
    const auto sum = direct_sum(pieces);
    return conjugate(sum, basis_changes(rng, sum));
}

/// f + d h + h d for a random degree-one map h : S_n -> T_{n+1}.
template <Ring R>
ChainMap<R> perturb_by_homotopy(Rng& rng, const ChainMap<R>& f, int bound = 2) {
    const auto& s = f.source();
    const auto& t = f.target();
    const R& ring = s.ring();
    std::map<int, Matrix<R>> h;
    for (const auto& [n, r] : s.ranks()) {
        Matrix<R> m(ring, t.rank(n + 1), r);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ring.from_integer(uniform(rng, -bound, bound));
        h[n] = m;
    }
    auto at = [&](int n) {
        auto it = h.find(n);
        return it == h.end() ? Matrix<R>(ring, t.rank(n + 1), s.rank(n)) : it->second;
    };
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : s.ranks())
        comps[n] = f.component(n) + t.differential(n + 1) * at(n) + at(n - 1) * s.differential(n);
    return ChainMap<R>(s, t, comps);
}

/// Composes f with a random change of basis of its target.
template <Ring R>
ChainMap<R> conjugate_target(Rng& rng, const ChainMap<R>& f) {
    const auto p = basis_changes(rng, f.target());
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, m] : f.components()) comps[n] = p.at(n).forward * m;
    return ChainMap<R>(f.source(), conjugate(f.target(), p), comps);
}

/// Inclusion S -> S (+) cone(id_E) for a random E in degrees [lo, hi - 1],
/// perturbed by a homotopy and rewritten in a random target basis. Always a
/// quasi-isomorphism since the cone of an identity is contractible.
template <Ring R>
ChainMap<R> quasi_iso_from(Rng& rng, const ChainComplex<R>& s, int lo, int hi, std::size_t max_rank) {
    const R& ring = s.ring();
    const auto e = complex(rng, ring, lo, hi - 1, max_rank);
    const auto t = direct_sum(std::vector<ChainComplex<R>>{s, cone(ChainMap<R>::identity(e))});
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : s.ranks()) {
        Matrix<R> m(ring, t.rank(n), r);
        m.set_block(0, 0, Matrix<R>::identity(ring, r));
        comps[n] = m;
    }
    return conjugate_target(rng, perturb_by_homotopy(rng, ChainMap<R>(s, t, comps)));
}

/// c * (inclusion S -> S (+) cone(id_E)), perturbed and rewritten in a random
/// basis. A quasi-isomorphism exactly when multiplication by c is invertible
/// on H_*(S).
template <Ring R>
ChainMap<R> scaled_inclusion(Rng& rng, const ChainComplex<R>& s, long long c, int lo, int hi, std::size_t max_rank) {
    const R& ring = s.ring();
    const auto e = complex(rng, ring, lo, hi - 1, max_rank);
    const auto t = direct_sum(std::vector<ChainComplex<R>>{s, cone(ChainMap<R>::identity(e))});
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : s.ranks()) {
        Matrix<R> m(ring, t.rank(n), r);
        m.set_block(0, 0, Matrix<R>::identity(ring, r).scaled(ring.from_integer(c)));
        comps[n] = m;
    }
    return conjugate_target(rng, perturb_by_homotopy(rng, ChainMap<R>(s, t, comps)));
}

/// Integer matrix with entries uniform in [-bound, bound].
template <Ring R>
Matrix<R> matrix(Rng& rng, const R& ring, std::size_t rows, std::size_t cols, long long bound) {
    Matrix<R> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = ring.from_integer(uniform(rng, -bound, bound));
    return m;
}

/// The same double map with the target rewritten in a random basis at every
/// bidegree.
template <Ring R>
DoubleMap<R> conjugate_target(Rng& rng, const DoubleMap<R>& f) {
    const auto& y = f.target();
    const R& ring = y.ring();
    std::map<Bidegree, BasisChange<R>> p;
    for (const auto& [b, r] : y.ranks()) p.emplace(b, unimodular(rng, ring, r));
    auto fwd = [&](const Bidegree& b) { return p.count(b) ? p.at(b).forward : Matrix<R>(ring, 0, 0); };
    auto inv = [&](const Bidegree& b) { return p.count(b) ? p.at(b).inverse : Matrix<R>(ring, 0, 0); };
    std::map<Bidegree, Matrix<R>> h, v, comps;
    for (const auto& [b, r] : y.ranks()) {
        const auto [k, l] = b;
        h[b] = fwd({k - 1, l}) * y.horizontal(k, l) * inv(b);
        v[b] = fwd({k, l - 1}) * y.vertical(k, l) * inv(b);
    }
    for (const auto& [b, m] : f.components()) comps[b] = fwd(b) * m;
    return DoubleMap<R>(f.source(), DoubleComplex<R>(ring, y.ranks(), h, v), comps);
}

/// X -> Y with every row a quasi-isomorphism and columns in k >= 0: a sum of
/// pieces g (x) id_D for random quasi-isomorphisms g : C -> C' (degrees 0..2)
/// and random D (degrees 0..2), in a random target basis.
template <Ring R>
DoubleMap<R> rowwise_quasi_iso(Rng& rng, const R& ring, std::size_t max_rank) {
    std::vector<DoubleMap<R>> pieces;
    const int count = static_cast<int>(uniform(rng, 1, 2));
    for (int i = 0; i < count; ++i) {
        const auto c = complex(rng, ring, 0, 2, max_rank);
        const auto d = complex(rng, ring, 0, 2, max_rank);
        pieces.push_back(tensor_double(quasi_iso_from(rng, c, 0, 2, max_rank), ChainMap<R>::identity(d)));
    }
    return conjugate_target(rng, direct_sum(pieces));
}

} // namespace hocolim::random
