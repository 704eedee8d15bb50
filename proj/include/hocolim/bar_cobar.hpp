#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/dold_kan.hpp"
#include "hocolim/simplicial_set.hpp"
#include "hocolim/totalization.hpp"

namespace hocolim {

namespace detail {

// A level (+)_s V_s laid out block by block in every internal degree.
template <Ring R>
struct Layout {
    ChainComplex<R> complex;
    std::map<int, std::vector<std::size_t>> offsets;  // l -> summand -> offset
};

template <Ring R>
Layout<R> layout(const R& ring, const std::vector<ChainComplex<R>>& parts) {
    Layout<R> out{parts.empty() ? ChainComplex<R>::zero(ring) : direct_sum(parts), {}};
    for (const auto& [l, r] : out.complex.ranks()) {
        auto& off = out.offsets[l];
        std::size_t at = 0;
        for (const auto& p : parts) {
            off.push_back(at);
            at += p.rank(l);
        }
    }
    return out;
}

// One block of a structure map: summand `from` of the source level goes to
// summand `to` of the target level through `map` (nullptr = identity).
template <Ring R>
struct Block {
    std::size_t from;
    std::size_t to;
    const ChainMap<R>* map;
};

template <Ring R>
LevelMap<R> assemble(const Layout<R>& source, const Layout<R>& target, const std::vector<ChainComplex<R>>& source_parts,
                     const std::vector<Block<R>>& blocks) {
    LevelMap<R> out;
    const R& ring = source.complex.ring();
    for (const auto& [l, r] : source.complex.ranks()) {
        Matrix<R> m(ring, target.complex.rank(l), r);
        if (m.rows() > 0) {
            const auto& so = source.offsets.at(l);
            const auto& to = target.offsets.at(l);
            for (const auto& b : blocks) {
                const std::size_t w = source_parts[b.from].rank(l);
                if (w == 0) continue;
                m.set_block(to[b.to], so[b.from], b.map ? b.map->component(l) : Matrix<R>::identity(ring, w));
            }
        }
        out[l] = std::move(m);
    }
    return out;
}

template <class T>
std::map<T, std::size_t> index_of(const std::vector<T>& xs) {
    std::map<T, std::size_t> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace(xs[i], i);
    return out;
}

} // namespace detail

/// B_n(*, I, F) = (+) over n-chains x_0 -> ... -> x_n of F(x_0), through level d.
/// d_0 acts through F(first arrow), d_i (0 < i < n) composes arrows i and
/// i+1, d_n drops the last arrow, and s_i inserts an identity; all but d_0
/// have identity components.
template <Ring R>
SimplicialChainComplex<R> bar_simplicial(const Diagram<R>& f, int d) {
    require_valid(f);
    if (d < 0) fail(ErrorKind::IndexOutOfRange, "bar level " + std::to_string(d));
    const auto& c = f.index;
    const R& ring = f.ring();
    std::vector<std::vector<NerveSimplex>> chains;
    std::vector<std::map<NerveSimplex, std::size_t>> index;
    std::vector<std::vector<ChainComplex<R>>> parts;
    std::vector<detail::Layout<R>> layouts;
    std::vector<ChainComplex<R>> levels;
    for (int n = 0; n <= d; ++n) {
        chains.push_back(nerve_simplices(c, n));
        index.push_back(detail::index_of(chains.back()));
        std::vector<ChainComplex<R>> ps;
        for (const auto& s : chains.back()) ps.push_back(f.at(chain_source(c, s)));
        layouts.push_back(detail::layout(ring, ps));
        levels.push_back(layouts.back().complex);
        parts.push_back(std::move(ps));
    }
    std::vector<std::vector<LevelMap<R>>> faces(d + 1), degs(d + 1);
    for (int n = 1; n <= d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < chains[n].size(); ++s) {
                const auto& x = chains[n][s];
                const ChainMap<R>* via = i == 0 ? &f.on(x.morphisms.front()) : nullptr;
                blocks.push_back({s, index[n - 1].at(nerve_face(c, x, i)), via});
            }
            faces[n].push_back(detail::assemble(layouts[n], layouts[n - 1], parts[n], blocks));
        }
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < chains[n].size(); ++s) blocks.push_back({s, index[n + 1].at(nerve_degeneracy(c, chains[n][s], i)), nullptr});
            degs[n].push_back(detail::assemble(layouts[n], layouts[n + 1], parts[n], blocks));
        }
    return SimplicialChainComplex<R>(ring, std::move(levels), std::move(faces), std::move(degs));
}

/// C^n(*, I, F) = product over n-chains of F(x_n), through level d.
/// (delta^i y)_x = y_{d_i x}, through F(last arrow) when i = n;
/// (sigma^i y)_x = y_{s_i x}.
template <Ring R>
CosimplicialChainComplex<R> cobar_cosimplicial(const Diagram<R>& f, int d) {
    require_valid(f);
    if (d < 0) fail(ErrorKind::IndexOutOfRange, "cobar level " + std::to_string(d));
    const auto& c = f.index;
    const R& ring = f.ring();
    std::vector<std::vector<NerveSimplex>> chains;
    std::vector<std::map<NerveSimplex, std::size_t>> index;
    std::vector<std::vector<ChainComplex<R>>> parts;
    std::vector<detail::Layout<R>> layouts;
    std::vector<ChainComplex<R>> levels;
    for (int n = 0; n <= d; ++n) {
        chains.push_back(nerve_simplices(c, n));
        index.push_back(detail::index_of(chains.back()));
        std::vector<ChainComplex<R>> ps;
        for (const auto& s : chains.back()) ps.push_back(f.at(chain_target(c, s)));
        layouts.push_back(detail::layout(ring, ps));
        levels.push_back(layouts.back().complex);
        parts.push_back(std::move(ps));
    }
    std::vector<std::vector<LevelMap<R>>> cofaces(d + 1), codegs(d + 1);
    for (int n = 1; n <= d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < chains[n].size(); ++s) {
                const auto& x = chains[n][s];
                const ChainMap<R>* via = i == n ? &f.on(x.morphisms.back()) : nullptr;
                blocks.push_back({index[n - 1].at(nerve_face(c, x, i)), s, via});
            }
            cofaces[n].push_back(detail::assemble(layouts[n - 1], layouts[n], parts[n - 1], blocks));
        }
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < chains[n].size(); ++s) blocks.push_back({index[n + 1].at(nerve_degeneracy(c, chains[n][s], i)), s, nullptr});
            codegs[n].push_back(detail::assemble(layouts[n + 1], layouts[n], parts[n + 1], blocks));
        }
    return CosimplicialChainComplex<R>(ring, std::move(levels), std::move(cofaces), std::move(codegs));
}

/// Level n = C^(+|K_n|) over all n-simplices of K, degenerate ones included,
/// with faces and degeneracies moving summands along those of K. Levels above
/// dim K are filled in by degeneracies.
template <Ring R>
SimplicialChainComplex<R> linearize(const FiniteSimplicialSet& k, const ChainComplex<R>& c, int d) {
    if (d < 0) fail(ErrorKind::IndexOutOfRange, "linearization level " + std::to_string(d));
    const R& ring = c.ring();
    std::vector<std::vector<Simplex>> simplices;
    std::vector<std::map<Simplex, std::size_t>> index;
    std::vector<std::vector<ChainComplex<R>>> parts;
    std::vector<detail::Layout<R>> layouts;
    std::vector<ChainComplex<R>> levels;
    for (int n = 0; n <= d; ++n) {
        simplices.push_back(k.all_simplices(n));
        index.push_back(detail::index_of(simplices.back()));
        parts.emplace_back(simplices.back().size(), c);
        layouts.push_back(detail::layout(ring, parts.back()));
        levels.push_back(layouts.back().complex);
    }
    std::vector<std::vector<LevelMap<R>>> faces(d + 1), degs(d + 1);
    for (int n = 1; n <= d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < simplices[n].size(); ++s) blocks.push_back({s, index[n - 1].at(k.face(simplices[n][s], i)), nullptr});
            faces[n].push_back(detail::assemble(layouts[n], layouts[n - 1], parts[n], blocks));
        }
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<detail::Block<R>> blocks;
            for (std::size_t s = 0; s < simplices[n].size(); ++s) blocks.push_back({s, index[n + 1].at(k.degeneracy(simplices[n][s], i)), nullptr});
            degs[n].push_back(detail::assemble(layouts[n], layouts[n + 1], parts[n], blocks));
        }
    return SimplicialChainComplex<R>(ring, std::move(levels), std::move(faces), std::move(degs));
}

namespace detail {

// Highest level whose Moore or normalized terms can reach total degree hi + 1.
template <class X>
int levels_needed(const X& x, const DegreeWindow& w) {
    const auto range = x.internal_range();
    return range ? std::max(0, w.hi + 1 - range->first) : 0;
}

template <class X>
X enough_levels(const X& x, const DegreeWindow& w) {
    const int need = levels_needed(x, w);
    if (x.truncation() < need)
        fail(ErrorKind::InsufficientTruncation, "window " + w.to_string() + " needs levels 0.." + std::to_string(need) +
                                                    " but the simplicial object stops at level " + std::to_string(x.truncation()));
    return x.truncation() == need ? x : x.truncated(need);
}

} // namespace detail

/// |X| as Tot^(+) of the normalized complex, on the window.
template <Ring R>
ChainComplex<R> realization(const SimplicialChainComplex<R>& x, const DegreeWindow& w) {
    return tot_sum(normalized(detail::enough_levels(x, w)).complex, w);
}

/// Fat realization Tot^(+) of the Moore complex, on the window.
template <Ring R>
ChainComplex<R> fat_realization(const SimplicialChainComplex<R>& x, const DegreeWindow& w) {
    return tot_sum(moore(detail::enough_levels(x, w)), w);
}

/// Homotopy colimit over Delta^op: the fat realization.
template <Ring R>
ChainComplex<R> simplicial_hocolim(const SimplicialChainComplex<R>& x, const DegreeWindow& w) {
    return fat_realization(x, w);
}

/// The inclusion N -> M totalized on the window.
template <Ring R>
ChainMap<R> normalized_inclusion_total(const SimplicialChainComplex<R>& x, const DegreeWindow& w) {
    return tot_sum(normalized(detail::enough_levels(x, w)).map, w);
}

/// Tot X as Tot^Pi of the cosimplicial normalization, on the window.
/// Throws InfiniteAntidiagonal when the window reaches past the
/// materialized levels.
template <Ring R>
ChainComplex<R> cosimplicial_totalization(const CosimplicialChainComplex<R>& x, const DegreeWindow& w) {
    return tot_prod(normalized_cosimplicial(x).complex, w);
}

/// A windowed homotopy (co)limit with the homology it certifies.
template <Ring R>
struct HocolimResult {
    ChainComplex<R> complex;
    DegreeWindow window;
    int levels_used = 0;
    std::map<int, HomologyGroup> homology;
};

/// Bar levels beyond this make the computation impractical; reaching it is
/// reported as UnboundedValues.
inline constexpr int kMaxBarLevel = 12;

namespace detail {

template <Ring R>
HocolimResult<R> hocolim_at(const Diagram<R>& f, const DegreeWindow& w, int levels) {
    const auto total = tot_sum(moore(bar_simplicial(f, levels)), w);
    return {total, w, levels, window_homology(total, w)};
}

} // namespace detail

/// hocolim F as Tot^(+) of the Moore complex of the bar construction, with
/// bar levels 0..k_max where k_max = hi + 1 - (lowest degree of any value).
/// The result is recomputed with one more level (plus `extra_levels`) and the
/// homology compared.
template <Ring R>
HocolimResult<R> hocolim(const Diagram<R>& f, const DegreeWindow& w, int extra_levels = 0) {
    require_valid(f);
    const auto lo = f.min_degree();
    const int k_max = (lo ? std::max(0, w.hi + 1 - *lo) : 0) + extra_levels;
    if (k_max + 1 > kMaxBarLevel)
        fail(ErrorKind::UnboundedValues, "window " + w.to_string() + " needs bar level " + std::to_string(k_max + 1) +
                                             " for values starting in degree " + std::to_string(lo.value_or(0)) + "; the limit is " +
                                             std::to_string(kMaxBarLevel));
    auto result = detail::hocolim_at(f, w, k_max);
    const auto check = detail::hocolim_at(f, w, k_max + 1);
    ensure(check.homology == result.homology, "hocolim homology changed with one more bar level");
    return result;
}

/// holim F as Tot^Pi of the cosimplicial M-bar of the cobar construction.
/// Requires a loop-free index category, where M-bar vanishes above the
/// nondegenerate dimension D of the nerve; levels 0..D+1 (plus
/// `extra_levels`) are built and the vanishing is checked.
template <Ring R>
HocolimResult<R> holim(const Diagram<R>& f, const DegreeWindow& w, int extra_levels = 0) {
    require_valid(f);
    if (auto loop = loop_witness(f.index))
        fail(ErrorKind::LoopsInIndexCategory, "holim needs a loop-free index category; found " + *loop);
    const int dim = nondegenerate_dimension(f.index);
    const int levels = dim + 1 + extra_levels;
    const auto mb = mbar_cosimplicial(cobar_cosimplicial(f, levels)).complex;
    for (const auto& [b, r] : mb.ranks()) ensure(-b.first <= dim, "cosimplicial M-bar is nonzero above the nerve dimension");
    const auto total = tot_prod(mb.with_truncation(std::nullopt), w);
    return {total, w, levels, window_homology(total, w)};
}

/// The map hocolim F -> hocolim G induced by a natural transformation with
/// components `eta` (one per object), on the window. Both sides use the bar
/// levels hocolim would pick for the lower of the two value ranges.
template <Ring R>
ChainMap<R> hocolim_map(const Diagram<R>& f, const Diagram<R>& g, const std::vector<ChainMap<R>>& eta, const DegreeWindow& w) {
    require_valid(f);
    require_valid(g);
    const auto& c = f.index;
    if (!(g.index == c) || eta.size() != c.object_count())
        fail(ErrorKind::InvalidDiagram, "natural transformation needs one component per object of a shared index category");
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (!(eta[o].source() == f.at(o)) || !(eta[o].target() == g.at(o)))
            fail(ErrorKind::InvalidDiagram, "component at " + c.object_name(o) + " does not go from F(" + c.object_name(o) + ") to G(" +
                                                c.object_name(o) + ")");
    for (std::size_t m = 0; m < c.morphism_count(); ++m)
        if (!(compose(g.on(m), eta[c.source(m)]) == compose(eta[c.target(m)], f.on(m))))
            fail(ErrorKind::InvalidDiagram, "transformation is not natural at " + c.morphism_name(m));
    std::optional<int> lo = f.min_degree();
    if (auto d = g.min_degree()) lo = lo ? std::min(*lo, *d) : *d;
    const int k_max = lo ? std::max(0, w.hi + 1 - *lo) : 0;
    const auto ms = moore(bar_simplicial(f, k_max));
    const auto mt = moore(bar_simplicial(g, k_max));
    std::map<Bidegree, Matrix<R>> comps;
    for (int n = 0; n <= k_max; ++n) {
        const auto chains = nerve_simplices(c, n);
        std::set<int> degrees;
        for (const auto& x : chains) {
            for (const auto& [l, r] : f.at(chain_source(c, x)).ranks()) degrees.insert(l);
            for (const auto& [l, r] : g.at(chain_source(c, x)).ranks()) degrees.insert(l);
        }
        for (int l : degrees) {
            Matrix<R> m(f.ring(), mt.rank(n, l), ms.rank(n, l));
            std::size_t row = 0, col = 0;
            for (const auto& x : chains) {
                const auto o = chain_source(c, x);
                m.set_block(row, col, eta[o].component(l));
                row += g.at(o).rank(l);
                col += f.at(o).rank(l);
            }
            comps[{n, l}] = m;
        }
    }
    return tot_sum(DoubleMap<R>(ms, mt, comps), w);
}

} // namespace hocolim
