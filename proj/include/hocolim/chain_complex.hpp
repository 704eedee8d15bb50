#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <string>
#include <vector>

#include "hocolim/homology_group.hpp"
#include "hocolim/matrix.hpp"
#include "hocolim/smith.hpp"

namespace hocolim {

/// Bounded chain complex of finitely generated free modules. Degree n has
/// rank(n) basis vectors; the differential d_n : C_n -> C_{n-1} is a
/// rank(n-1) x rank(n) matrix and is stored exactly where both ranks are
/// nonzero. d_{n-1} d_n = 0 is checked on construction.
template <Ring R>
class ChainComplex {
public:
    using Mat = Matrix<R>;

    ChainComplex() = default;

    explicit ChainComplex(R ring) : ring_(std::move(ring)) {}

    ChainComplex(R ring, const std::map<int, std::size_t>& ranks, const std::map<int, Mat>& differentials)
        : ring_(std::move(ring)) {
        for (const auto& [n, r] : ranks)
            if (r > 0) ranks_[n] = r;
        for (const auto& [n, d] : differentials) {
            if (!(d.ring() == ring_)) fail(ErrorKind::RingMismatch, "differential d_" + std::to_string(n));
            if (d.rows() != rank(n - 1) || d.cols() != rank(n))
                fail(ErrorKind::Shape, "differential d_" + std::to_string(n) + " has shape " + d.shape() + ", expected " +
                                           std::to_string(rank(n - 1)) + "x" + std::to_string(rank(n)));
            if (!d.empty()) differentials_[n] = d;
        }
        for (const auto& [n, r] : ranks_)
            if (rank(n - 1) > 0 && !differentials_.count(n)) differentials_[n] = Mat(ring_, rank(n - 1), r);
        for (const auto& [n, d] : differentials_) {
            auto below = differentials_.find(n - 1);
            if (below != differentials_.end() && !(below->second * d).is_zero())
                fail(ErrorKind::Shape, "d_" + std::to_string(n - 1) + " * d_" + std::to_string(n) + " != 0");
        }
    }

    static ChainComplex zero(const R& ring) { return ChainComplex(ring); }

    /// R^r concentrated in one degree.
    static ChainComplex free(const R& ring, int degree, std::size_t r = 1) { return ChainComplex(ring, {{degree, r}}, {}); }

    /// R^r --m--> R^s in degrees top -> top-1.
    static ChainComplex two_term(const Mat& m, int top) {
        return ChainComplex(m.ring(), {{top, m.cols()}, {top - 1, m.rows()}}, {{top, m}});
    }

    const R& ring() const { return ring_; }

    std::size_t rank(int n) const {
        auto it = ranks_.find(n);
        return it == ranks_.end() ? 0 : it->second;
    }

    Mat differential(int n) const {
        auto it = differentials_.find(n);
        return it == differentials_.end() ? Mat(ring_, rank(n - 1), rank(n)) : it->second;
    }

    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    const std::map<int, Mat>& differentials() const { return differentials_; }

    bool is_zero() const { return ranks_.empty(); }
    std::optional<int> min_degree() const { return ranks_.empty() ? std::nullopt : std::optional<int>(ranks_.begin()->first); }
    std::optional<int> max_degree() const { return ranks_.empty() ? std::nullopt : std::optional<int>(ranks_.rbegin()->first); }

    std::size_t total_rank() const {
        std::size_t t = 0;
        for (const auto& [n, r] : ranks_) t += r;
        return t;
    }

    friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
        return a.ring_ == b.ring_ && a.ranks_ == b.ranks_ && a.differentials_ == b.differentials_;
    }

private:
    R ring_{};
    std::map<int, std::size_t> ranks_;
    std::map<int, Mat> differentials_;
};

/// Degreewise matrices f_n : S_n -> T_n commuting with the differentials.
template <Ring R>
class ChainMap {
public:
    using Mat = Matrix<R>;

    ChainMap() = default;

    ChainMap(ChainComplex<R> source, ChainComplex<R> target, const std::map<int, Mat>& components)
        : source_(std::move(source)), target_(std::move(target)) {
        if (!(source_.ring() == target_.ring())) fail(ErrorKind::RingMismatch, "chain map between different rings");
        for (const auto& [n, f] : components) {
            if (f.rows() != target_.rank(n) || f.cols() != source_.rank(n))
                fail(ErrorKind::Shape, "chain map component " + std::to_string(n) + " has shape " + f.shape() + ", expected " +
                                           std::to_string(target_.rank(n)) + "x" + std::to_string(source_.rank(n)));
            if (!f.empty()) components_[n] = f;
        }
        for (int n : degrees()) {
            if (!(target_.differential(n) * component(n) == component(n - 1) * source_.differential(n)))
                fail(ErrorKind::Shape, "chain map does not commute with the differentials in degree " + std::to_string(n));
        }
    }

    static ChainMap identity(const ChainComplex<R>& c) {
        std::map<int, Mat> comps;
        for (const auto& [n, r] : c.ranks()) comps[n] = Mat::identity(c.ring(), r);
        return ChainMap(c, c, comps);
    }

    static ChainMap zero(const ChainComplex<R>& s, const ChainComplex<R>& t) { return ChainMap(s, t, {}); }

    const ChainComplex<R>& source() const { return source_; }
    const ChainComplex<R>& target() const { return target_; }

    Mat component(int n) const {
        auto it = components_.find(n);
        return it == components_.end() ? Mat(source_.ring(), target_.rank(n), source_.rank(n)) : it->second;
    }

    const std::map<int, Mat>& components() const { return components_; }

    /// Degrees where source or target is nonzero, plus one above for the
    /// commutation check.
    std::set<int> degrees() const {
        std::set<int> ds;
        for (const auto* c : {&source_, &target_})
            for (const auto& [n, r] : c->ranks()) {
                ds.insert(n);
                ds.insert(n + 1);
            }
        return ds;
    }

    friend bool operator==(const ChainMap& a, const ChainMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
    }

private:
    ChainComplex<R> source_;
    ChainComplex<R> target_;
    std::map<int, Mat> components_;
};

/// g . f
template <Ring R>
ChainMap<R> compose(const ChainMap<R>& g, const ChainMap<R>& f) {
    if (!(f.target() == g.source())) fail(ErrorKind::Shape, "composing chain maps with mismatched (co)domains");
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : f.source().ranks()) comps[n] = g.component(n) * f.component(n);
    return ChainMap<R>(f.source(), g.target(), comps);
}

/// H_n(C) as kernel-basis coordinates: K spans ker d_n, the image of d_{n+1}
/// is rewritten in those coordinates, and the Smith form of that inclusion
/// gives free rank and torsion.
template <Ring R>
HomologyGroup homology(const ChainComplex<R>& c, int n) {
    const std::size_t cn = c.rank(n);
    if (cn == 0) return {};
    const R& ring = c.ring();
    Matrix<R> retraction = Matrix<R>::identity(ring, cn);
    if (c.rank(n - 1) > 0) retraction = kernel_summand(c.differential(n)).retraction;
    const std::size_t cycles = retraction.rows();
    if (cycles == 0) return {};
    HomologyGroup h;
    std::size_t boundary_rank = 0;
    if (c.rank(n + 1) > 0) {
        for (const auto& d : elementary_divisors(retraction * c.differential(n + 1))) {
            ++boundary_rank;
            if constexpr (std::is_same_v<R, Integers>)
                if (d > 1) h.torsion.push_back(d);
        }
    }
    h.free_rank = cycles - boundary_rank;
    return h;
}

/// Homology in every degree of the closed range [lo, hi].
template <Ring R>
std::map<int, HomologyGroup> homology_range(const ChainComplex<R>& c, int lo, int hi) {
    std::map<int, HomologyGroup> out;
    for (int n = lo; n <= hi; ++n) out[n] = homology(c, n);
    return out;
}

/// Sigma^k C: degree n holds C_{n-k}, differential multiplied by (-1)^k.
template <Ring R>
ChainComplex<R> shift(const ChainComplex<R>& c, int k) {
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix<R>> diffs;
    for (const auto& [n, r] : c.ranks()) ranks[n + k] = r;
    for (const auto& [n, d] : c.differentials()) diffs[n + k] = d.signed_by(k);
    return ChainComplex<R>(c.ring(), ranks, diffs);
}

/// Mapping cone: cone_n = T_n (+) S_{n-1} with differential
/// [[d^T_n, f_{n-1}], [0, -d^S_{n-1}]].
template <Ring R>
ChainComplex<R> cone(const ChainMap<R>& f) {
    const auto& s = f.source();
    const auto& t = f.target();
    const R& ring = s.ring();
    std::set<int> degrees;
    for (const auto& [n, r] : t.ranks()) degrees.insert(n);
    for (const auto& [n, r] : s.ranks()) degrees.insert(n + 1);
    std::map<int, std::size_t> ranks;
    for (int n : degrees) ranks[n] = t.rank(n) + s.rank(n - 1);
    std::map<int, Matrix<R>> diffs;
    for (int n : degrees) {
        if (ranks.count(n - 1) == 0) continue;
        Matrix<R> d(ring, ranks[n - 1], ranks[n]);
        d.set_block(0, 0, t.differential(n));
        d.set_block(0, t.rank(n), f.component(n - 1));
        d.set_block(t.rank(n - 1), t.rank(n), -s.differential(n - 1));
        diffs[n] = d;
    }
    return ChainComplex<R>(ring, ranks, diffs);
}

/// Quasi-isomorphism test through acyclicity of the mapping cone.
template <Ring R>
bool is_quasi_iso(const ChainMap<R>& f) {
    const auto c = cone(f);
    for (const auto& [n, r] : c.ranks())
        if (!homology(c, n).is_zero()) return false;
    return true;
}

/// Quasi-isomorphism test restricted to degrees [lo, hi], reading only
/// degrees lo-1 .. hi+1 of either side: H_n(S) and H_n(T) must be isomorphic
/// and H_n(f) onto, which forces H_n(f) to be bijective (finitely generated
/// modules are Hopfian).
template <Ring R>
bool is_quasi_iso_on(const ChainMap<R>& f, int lo, int hi) {
    const auto& s = f.source();
    const auto& t = f.target();
    for (int n = lo; n <= hi; ++n) {
        if (!(homology(s, n) == homology(t, n))) return false;
        if (t.rank(n) == 0) continue;
        const auto gens = hstack(f.component(n) * kernel_basis(s.differential(n)), t.differential(n + 1));
        if (!in_column_span(gens, kernel_basis(t.differential(n)))) return false;
    }
    return true;
}

/// Degreewise block sum in input order.
template <Ring R>
ChainComplex<R> direct_sum(const std::vector<ChainComplex<R>>& parts) {
    if (parts.empty()) fail(ErrorKind::Shape, "direct sum of no complexes needs a ring");
    const R& ring = parts.front().ring();
    std::set<int> degrees;
    for (const auto& p : parts) {
        if (!(p.ring() == ring)) fail(ErrorKind::RingMismatch, "direct sum over different rings");
        for (const auto& [n, r] : p.ranks()) degrees.insert(n);
    }
    std::map<int, std::size_t> ranks;
    for (int n : degrees)
        for (const auto& p : parts) ranks[n] += p.rank(n);
    std::map<int, Matrix<R>> diffs;
    for (int n : degrees) {
        if (!ranks.count(n - 1)) continue;
        Matrix<R> d(ring, ranks[n - 1], ranks[n]);
        std::size_t row = 0, col = 0;
        for (const auto& p : parts) {
            d.set_block(row, col, p.differential(n));
            row += p.rank(n - 1);
            col += p.rank(n);
        }
        diffs[n] = d;
    }
    return ChainComplex<R>(ring, ranks, diffs);
}

namespace detail {

// Offsets of the summands C_k (x) D_{n-k} inside (C (x) D)_n, ascending k.
template <Ring R>
std::map<int, std::size_t> tensor_offsets(const ChainComplex<R>& c, const ChainComplex<R>& d, int n) {
    std::map<int, std::size_t> offsets;
    std::size_t at = 0;
    for (const auto& [k, ck] : c.ranks()) {
        const std::size_t dl = d.rank(n - k);
        if (dl == 0) continue;
        offsets[k] = at;
        at += ck * dl;
    }
    return offsets;
}

template <Ring R>
std::set<int> tensor_degrees(const ChainComplex<R>& c, const ChainComplex<R>& d) {
    std::set<int> out;
    for (const auto& [k, ck] : c.ranks())
        for (const auto& [l, dl] : d.ranks()) out.insert(k + l);
    return out;
}

} // namespace detail

/// Tensor product with the Koszul sign d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Summands are ordered by ascending k and, inside C_k (x) D_l, by
/// (basis index of x, basis index of y).
template <Ring R>
ChainComplex<R> tensor(const ChainComplex<R>& c, const ChainComplex<R>& d) {
    if (!(c.ring() == d.ring())) fail(ErrorKind::RingMismatch, "tensor product over different rings");
    const R& ring = c.ring();
    std::map<int, std::size_t> ranks;
    const auto degrees = detail::tensor_degrees(c, d);
    for (int n : degrees)
        for (const auto& [k, ck] : c.ranks()) ranks[n] += ck * d.rank(n - k);
    std::map<int, Matrix<R>> diffs;
    for (int n : degrees) {
        if (!ranks.count(n - 1)) continue;
        const auto src = detail::tensor_offsets(c, d, n);
        const auto dst = detail::tensor_offsets(c, d, n - 1);
        Matrix<R> m(ring, ranks[n - 1], ranks[n]);
        for (const auto& [k, col] : src) {
            const int l = n - k;
            if (auto it = dst.find(k - 1); it != dst.end())
                m.set_block(it->second, col, kronecker(c.differential(k), Matrix<R>::identity(ring, d.rank(l))));
            if (auto it = dst.find(k); it != dst.end())
                m.set_block(it->second, col, kronecker(Matrix<R>::identity(ring, c.rank(k)), d.differential(l)).signed_by(k));
        }
        diffs[n] = m;
    }
    return ChainComplex<R>(ring, ranks, diffs);
}

/// f (x) g : S (x) S' -> T (x) T', no sign since both maps have degree 0.
template <Ring R>
ChainMap<R> tensor(const ChainMap<R>& f, const ChainMap<R>& g) {
    const auto source = tensor(f.source(), g.source());
    const auto target = tensor(f.target(), g.target());
    const R& ring = source.ring();
    std::map<int, Matrix<R>> comps;
    for (const auto& [n, r] : source.ranks()) {
        const auto src = detail::tensor_offsets(f.source(), g.source(), n);
        const auto dst = detail::tensor_offsets(f.target(), g.target(), n);
        Matrix<R> m(ring, target.rank(n), r);
        for (const auto& [k, col] : src)
            if (auto it = dst.find(k); it != dst.end()) m.set_block(it->second, col, kronecker(f.component(k), g.component(n - k)));
        comps[n] = m;
    }
    return ChainMap<R>(source, target, comps);
}

} // namespace hocolim
