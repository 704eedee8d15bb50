#pragma once

#include <map>
#include <string>

#include "hocolim/chain_complex.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim {

/// K (x) C := N_*(K) (x) C.
template <Ring R>
ChainComplex<R> tensor(const FiniteSimplicialSet& k, const ChainComplex<R>& c) {
    return tensor(normalized_chains<R>(k, c.ring()), c);
}

/// Right-hand side of the Kunneth isomorphism
///   H_n(K (x) C) = (+)_{k+l=n} H_k(K) (x) H_l(C),
/// valid when every H_k(K) is free.
template <Ring R>
HomologyGroup kunneth_rhs(const FiniteSimplicialSet& k, const ChainComplex<R>& c, int n) {
    const auto nk = normalized_chains<R>(k, c.ring());
    HomologyGroup out;
    for (int i = 0; i <= k.d_max(); ++i) {
        const auto hk = homology(nk, i);
        if (!hk.torsion.empty())
            fail(ErrorKind::NonFreeHomology, "H_" + std::to_string(i) + " of the simplicial set is " + hk.to_string());
        out = direct_sum(out, tensor_groups(hk, homology(c, n - i)));
    }
    return out;
}

/// Chain map N_*(K) -> N_*(L) of a subobject K of L, matching nondegenerate
/// simplices by name. Throws Shape if a name is missing or faces disagree.
template <Ring R>
ChainMap<R> inclusion_by_name(const FiniteSimplicialSet& k, const FiniteSimplicialSet& l, const R& ring = R{}) {
    std::map<int, std::vector<std::size_t>> index;
    for (int n = 0; n <= k.d_max(); ++n)
        for (std::size_t x = 0; x < k.count(n); ++x) {
            auto y = l.find(n, k.name(n, x));
            if (!y) fail(ErrorKind::Shape, "simplex " + k.name(n, x) + " has no counterpart");
            index[n].push_back(*y);
        }
    for (int n = 1; n <= k.d_max(); ++n)
        for (std::size_t x = 0; x < k.count(n); ++x)
            for (int i = 0; i <= n; ++i) {
                Simplex f = k.nondegenerate_face(n, x, i);
                f.base = index[f.base_dim][f.base];
                if (!(f == l.nondegenerate_face(n, index[n][x], i)))
                    fail(ErrorKind::Shape, "face d_" + std::to_string(i) + " of " + k.name(n, x) + " differs in the target");
            }
    const auto nk = normalized_chains<R>(k, ring);
    const auto nl = normalized_chains<R>(l, ring);
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, idx] : index) {
        Matrix<R> m(ring, nl.rank(n), nk.rank(n));
        for (std::size_t x = 0; x < idx.size(); ++x) m(idx[x], x) = ring.one();
        comps[n] = m;
    }
    return ChainMap<R>(nk, nl, comps);
}

/// Whether the pushout-product map
///   (A (x) D) u_{A (x) C} (B (x) C) -> B (x) D
/// of i : A -> B and j : C -> D is injective in every degree, i.e. whether
/// the kernel of [i (x) 1, 1 (x) j] is exactly the image of (1 (x) j, -(i (x) 1)).
template <Ring R>
bool pushout_product_injective(const ChainMap<R>& i, const ChainMap<R>& j) {
    const auto a_d = tensor(i, ChainMap<R>::identity(j.target()));
    const auto b_c = tensor(ChainMap<R>::identity(i.target()), j);
    const auto a_c_into_a_d = tensor(ChainMap<R>::identity(i.source()), j);
    const auto a_c_into_b_c = tensor(i, ChainMap<R>::identity(j.source()));
    auto degrees = a_d.degrees();
    degrees.merge(b_c.degrees());
    for (int n : degrees) {
        const auto phi = hstack(a_d.component(n), b_c.component(n));
        const auto glue = vstack(a_c_into_a_d.component(n), -a_c_into_b_c.component(n));
        const std::size_t kernel_rank = phi.cols() - rank(phi);
        if (glue.cols() == 0) {
            if (kernel_rank != 0) return false;
            continue;
        }
        const auto divisors = elementary_divisors(glue);
        if (divisors.size() != glue.cols() || divisors.size() != kernel_rank) return false;
        for (const auto& d : divisors)
            if (!phi.ring().is_unit(d)) return false;
    }
    return true;
}

} // namespace hocolim
