#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hocolim/chain_complex.hpp"

namespace hocolim {

using Bidegree = std::pair<int, int>;

inline std::string to_string(const Bidegree& b) {
    return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

/// Marks a double complex as a finite piece of an infinite one: the columns
/// beyond `last_known` (above it for Side::Above, below it for Side::Below)
/// exist but were not materialized. `rows` bounds the rows those columns can
/// occupy; nullopt means no bound is known.
struct Truncation {
    enum class Side { Above, Below };
    Side side = Side::Above;
    int last_known = 0;
    std::optional<std::pair<int, int>> rows;

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Bigraded free module X_{k,l} (k horizontal, l vertical) with
/// d^h : X_{k,l} -> X_{k-1,l} and d^v : X_{k,l} -> X_{k,l-1} satisfying
/// d^h d^h = 0, d^v d^v = 0 and d^v d^h = d^h d^v. Signs for the totalization
/// are applied there, not here.
template <Ring R>
class DoubleComplex {
public:
    using Mat = Matrix<R>;

    DoubleComplex() = default;

    DoubleComplex(R ring, const std::map<Bidegree, std::size_t>& ranks, const std::map<Bidegree, Mat>& horizontal,
                  const std::map<Bidegree, Mat>& vertical, std::optional<Truncation> truncation = std::nullopt)
        : ring_(std::move(ring)), truncation_(truncation) {
        for (const auto& [b, r] : ranks)
            if (r > 0) ranks_[b] = r;
        auto store = [this](const std::map<Bidegree, Mat>& in, std::map<Bidegree, Mat>& out, bool h) {
            for (const auto& [b, m] : in) {
                const Bidegree to = h ? Bidegree{b.first - 1, b.second} : Bidegree{b.first, b.second - 1};
                if (m.rows() != rank(to) || m.cols() != rank(b))
                    fail(ErrorKind::Shape, std::string(h ? "horizontal" : "vertical") + " differential at " + hocolim::to_string(b) +
                                               " has shape " + m.shape() + ", expected " + std::to_string(rank(to)) + "x" +
                                               std::to_string(rank(b)));
                if (!m.empty() && !m.is_zero()) out[b] = m;
            }
        };
        store(horizontal, horizontal_, true);
        store(vertical, vertical_, false);
        for (const auto& [b, r] : ranks_) {
            const auto [k, l] = b;
            if (!(this->horizontal(k - 1, l) * this->horizontal(k, l)).is_zero())
                fail(ErrorKind::Shape, "d^h d^h != 0 at " + hocolim::to_string(b));
            if (!(this->vertical(k, l - 1) * this->vertical(k, l)).is_zero())
                fail(ErrorKind::Shape, "d^v d^v != 0 at " + hocolim::to_string(b));
            if (!(this->vertical(k - 1, l) * this->horizontal(k, l) == this->horizontal(k, l - 1) * this->vertical(k, l)))
                fail(ErrorKind::Shape, "d^v d^h != d^h d^v at " + hocolim::to_string(b));
        }
    }

    const R& ring() const { return ring_; }

    std::size_t rank(int k, int l) const { return rank({k, l}); }
    std::size_t rank(const Bidegree& b) const {
        auto it = ranks_.find(b);
        return it == ranks_.end() ? 0 : it->second;
    }

    Mat horizontal(int k, int l) const {
        auto it = horizontal_.find({k, l});
        return it == horizontal_.end() ? Mat(ring_, rank(k - 1, l), rank(k, l)) : it->second;
    }
    Mat vertical(int k, int l) const {
        auto it = vertical_.find({k, l});
        return it == vertical_.end() ? Mat(ring_, rank(k, l - 1), rank(k, l)) : it->second;
    }

    const std::map<Bidegree, std::size_t>& ranks() const { return ranks_; }
    const std::map<Bidegree, Mat>& horizontals() const { return horizontal_; }
    const std::map<Bidegree, Mat>& verticals() const { return vertical_; }
    const std::optional<Truncation>& truncation() const { return truncation_; }

    bool is_zero() const { return ranks_.empty(); }

    /// Same data with the truncation marker replaced.
    DoubleComplex with_truncation(std::optional<Truncation> t) const {
        DoubleComplex out = *this;
        out.truncation_ = t;
        return out;
    }

    /// Range of l over the support, if any.
    std::optional<std::pair<int, int>> row_range() const {
        if (ranks_.empty()) return std::nullopt;
        int lo = ranks_.begin()->first.second, hi = lo;
        for (const auto& [b, r] : ranks_) {
            lo = std::min(lo, b.second);
            hi = std::max(hi, b.second);
        }
        return std::pair{lo, hi};
    }

    /// Column k as a chain complex in l with d^v.
    ChainComplex<R> column(int k) const {
        std::map<int, std::size_t> ranks;
        std::map<int, Mat> diffs;
        for (const auto& [b, r] : ranks_)
            if (b.first == k) ranks[b.second] = r;
        for (const auto& [b, m] : vertical_)
            if (b.first == k) diffs[b.second] = m;
        return ChainComplex<R>(ring_, ranks, diffs);
    }

    /// Row l as a chain complex in k with d^h.
    ChainComplex<R> row(int l) const {
        std::map<int, std::size_t> ranks;
        std::map<int, Mat> diffs;
        for (const auto& [b, r] : ranks_)
            if (b.second == l) ranks[b.first] = r;
        for (const auto& [b, m] : horizontal_)
            if (b.second == l) diffs[b.first] = m;
        return ChainComplex<R>(ring_, ranks, diffs);
    }

    friend bool operator==(const DoubleComplex& a, const DoubleComplex& b) {
        return a.ring_ == b.ring_ && a.ranks_ == b.ranks_ && a.horizontal_ == b.horizontal_ && a.vertical_ == b.vertical_ &&
               a.truncation_ == b.truncation_;
    }

private:
    R ring_{};
    std::map<Bidegree, std::size_t> ranks_;
    std::map<Bidegree, Mat> horizontal_;
    std::map<Bidegree, Mat> vertical_;
    std::optional<Truncation> truncation_;
};

/// Bidegreewise matrices commuting with both differentials.
template <Ring R>
class DoubleMap {
public:
    using Mat = Matrix<R>;

    DoubleMap() = default;

    DoubleMap(DoubleComplex<R> source, DoubleComplex<R> target, const std::map<Bidegree, Mat>& components)
        : source_(std::move(source)), target_(std::move(target)) {
        for (const auto& [b, f] : components) {
            if (f.rows() != target_.rank(b) || f.cols() != source_.rank(b))
                fail(ErrorKind::Shape, "double map component at " + to_string(b) + " has shape " + f.shape());
            if (!f.empty()) components_[b] = f;
        }
        std::set<Bidegree> support;
        for (const auto* x : {&source_, &target_})
            for (const auto& [b, r] : x->ranks()) {
                support.insert(b);
                support.insert({b.first + 1, b.second});
                support.insert({b.first, b.second + 1});
            }
        for (const auto& [k, l] : support) {
            if (!(target_.horizontal(k, l) * component({k, l}) == component({k - 1, l}) * source_.horizontal(k, l)))
                fail(ErrorKind::Shape, "double map does not commute with d^h at " + to_string({k, l}));
            if (!(target_.vertical(k, l) * component({k, l}) == component({k, l - 1}) * source_.vertical(k, l)))
                fail(ErrorKind::Shape, "double map does not commute with d^v at " + to_string({k, l}));
        }
    }

    const DoubleComplex<R>& source() const { return source_; }
    const DoubleComplex<R>& target() const { return target_; }

    Mat component(const Bidegree& b) const {
        auto it = components_.find(b);
        return it == components_.end() ? Mat(source_.ring(), target_.rank(b), source_.rank(b)) : it->second;
    }

    const std::map<Bidegree, Mat>& components() const { return components_; }

    /// The restriction to row l, a chain map in the horizontal direction.
    ChainMap<R> row(int l) const {
        std::map<int, Mat> comps;
        for (const auto& [b, m] : components_)
            if (b.second == l) comps[b.first] = m;
        return ChainMap<R>(source_.row(l), target_.row(l), comps);
    }

private:
    DoubleComplex<R> source_;
    DoubleComplex<R> target_;
    std::map<Bidegree, Mat> components_;
};

/// X_{k,l} = C_k (x) D_l with d^h = d^C (x) 1 and d^v = 1 (x) d^D.
template <Ring R>
DoubleComplex<R> tensor_double(const ChainComplex<R>& c, const ChainComplex<R>& d) {
    const R& ring = c.ring();
    std::map<Bidegree, std::size_t> ranks;
    std::map<Bidegree, Matrix<R>> h, v;
    for (const auto& [k, ck] : c.ranks())
        for (const auto& [l, dl] : d.ranks()) {
            ranks[{k, l}] = ck * dl;
            if (c.rank(k - 1) > 0) h[{k, l}] = kronecker(c.differential(k), Matrix<R>::identity(ring, dl));
            if (d.rank(l - 1) > 0) v[{k, l}] = kronecker(Matrix<R>::identity(ring, ck), d.differential(l));
        }
    return DoubleComplex<R>(ring, ranks, h, v);
}

/// f (x) g as a map of tensor double complexes.
template <Ring R>
DoubleMap<R> tensor_double(const ChainMap<R>& f, const ChainMap<R>& g) {
    const auto source = tensor_double(f.source(), g.source());
    const auto target = tensor_double(f.target(), g.target());
    std::map<Bidegree, Matrix<R>> comps;
    for (const auto& [b, r] : source.ranks()) comps[b] = kronecker(f.component(b.first), g.component(b.second));
    return DoubleMap<R>(source, target, comps);
}

/// Bidegreewise block sum in input order.
template <Ring R>
DoubleComplex<R> direct_sum(const std::vector<DoubleComplex<R>>& parts) {
    if (parts.empty()) fail(ErrorKind::Shape, "direct sum of no double complexes needs a ring");
    const R& ring = parts.front().ring();
    std::map<Bidegree, std::size_t> ranks;
    for (const auto& p : parts)
        for (const auto& [b, r] : p.ranks()) ranks[b] += r;
    std::map<Bidegree, Matrix<R>> h, v;
    for (const auto& [b, r] : ranks) {
        const auto [k, l] = b;
        Matrix<R> mh(ring, ranks.count({k - 1, l}) ? ranks.at({k - 1, l}) : 0, r);
        Matrix<R> mv(ring, ranks.count({k, l - 1}) ? ranks.at({k, l - 1}) : 0, r);
        std::size_t col = 0, row_h = 0, row_v = 0;
        for (const auto& p : parts) {
            mh.set_block(row_h, col, p.horizontal(k, l));
            mv.set_block(row_v, col, p.vertical(k, l));
            row_h += p.rank(k - 1, l);
            row_v += p.rank(k, l - 1);
            col += p.rank(k, l);
        }
        h[b] = mh;
        v[b] = mv;
    }
    return DoubleComplex<R>(ring, ranks, h, v);
}

/// Blockwise sum of double maps in input order.
template <Ring R>
DoubleMap<R> direct_sum(const std::vector<DoubleMap<R>>& parts) {
    if (parts.empty()) fail(ErrorKind::Shape, "direct sum of no double maps needs a ring");
    std::vector<DoubleComplex<R>> sources, targets;
    for (const auto& p : parts) {
        sources.push_back(p.source());
        targets.push_back(p.target());
    }
    const auto s = direct_sum(sources);
    const auto t = direct_sum(targets);
    std::map<Bidegree, Matrix<R>> comps;
    for (const auto& [b, r] : s.ranks()) {
        Matrix<R> m(s.ring(), t.rank(b), r);
        std::size_t row = 0, col = 0;
        for (const auto& p : parts) {
            m.set_block(row, col, p.component(b));
            row += p.target().rank(b);
            col += p.source().rank(b);
        }
        comps[b] = m;
    }
    return DoubleMap<R>(s, t, comps);
}

} // namespace hocolim
