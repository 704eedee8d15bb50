#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <string>
#include <vector>

#include "hocolim/double_complex.hpp"
#include "hocolim/smith.hpp"

namespace hocolim {

/// Components of a chain map between two levels, keyed by internal degree.
template <Ring R>
using LevelMap = std::map<int, Matrix<R>>;

namespace detail {

template <Ring R>
Matrix<R> component(const LevelMap<R>& f, int l, const R& ring, std::size_t rows, std::size_t cols) {
    auto it = f.find(l);
    return it == f.end() ? Matrix<R>(ring, rows, cols) : it->second;
}

// sum += (-1)^k f_l, skipping the zero entries of f_l.
template <Ring R>
void add_signed(Matrix<R>& sum, const LevelMap<R>& f, int l, int k) {
    auto it = f.find(l);
    if (it == f.end()) return;
    const Matrix<R>& m = it->second;
    const R& ring = sum.ring();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!ring.is_zero(m(i, j))) sum(i, j) = k % 2 == 0 ? ring.add(sum(i, j), m(i, j)) : ring.sub(sum(i, j), m(i, j));
}

// Row-wise sparse copy of a matrix.
template <Ring R>
struct Sparse {
    using T = typename R::value_type;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, T>>> entries;

    static Sparse of(const Matrix<R>& m) {
        Sparse out{m.rows(), m.cols(), std::vector<std::vector<std::pair<std::size_t, T>>>(m.rows())};
        const R& ring = m.ring();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!ring.is_zero(m(i, j))) out.entries[i].emplace_back(j, m(i, j));
        return out;
    }

    static Sparse of(const LevelMap<R>& f, int l, std::size_t rows, std::size_t cols) {
        auto it = f.find(l);
        if (it == f.end()) return {rows, cols, std::vector<std::vector<std::pair<std::size_t, T>>>(rows)};
        return of(it->second);
    }

    static Sparse identity(const R& ring, std::size_t n) {
        Sparse out{n, n, std::vector<std::vector<std::pair<std::size_t, T>>>(n)};
        for (std::size_t i = 0; i < n; ++i) out.entries[i].emplace_back(i, ring.one());
        return out;
    }

    friend bool operator==(const Sparse& a, const Sparse& b) { return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries; }
};

template <Ring R>
Sparse<R> multiply(const R& ring, const Sparse<R>& a, const Sparse<R>& b) {
    if (a.cols != b.rows) fail(ErrorKind::Shape, "cannot multiply structure maps of incompatible shapes");
    Sparse<R> out{a.rows, b.cols, std::vector<std::vector<std::pair<std::size_t, typename R::value_type>>>(a.rows)};
    std::map<std::size_t, typename R::value_type> acc;
    for (std::size_t i = 0; i < a.rows; ++i) {
        acc.clear();
        for (const auto& [k, v] : a.entries[i])
            for (const auto& [j, w] : b.entries[k]) {
                auto [it, fresh] = acc.emplace(j, ring.mul(v, w));
                if (!fresh) it->second = ring.add(it->second, ring.mul(v, w));
            }
        for (const auto& [j, v] : acc)
            if (!ring.is_zero(v)) out.entries[i].emplace_back(j, v);
    }
    return out;
}

template <Ring R>
std::set<int> internal_degrees(const std::vector<ChainComplex<R>>& levels) {
    std::set<int> out;
    for (const auto& x : levels)
        for (const auto& [l, r] : x.ranks()) out.insert(l);
    return out;
}

template <Ring R>
std::optional<std::pair<int, int>> internal_range(const std::vector<ChainComplex<R>>& levels) {
    const auto ds = internal_degrees(levels);
    if (ds.empty()) return std::nullopt;
    return std::pair{*ds.begin(), *ds.rbegin()};
}

template <Ring R>
void check_chain_map(const LevelMap<R>& f, const ChainComplex<R>& s, const ChainComplex<R>& t, const std::string& what) {
    const R& ring = s.ring();
    for (const auto& [l, m] : f)
        if (m.rows() != t.rank(l) || m.cols() != s.rank(l))
            fail(ErrorKind::Shape, what + " has shape " + m.shape() + " in internal degree " + std::to_string(l));
    std::set<int> ds;
    for (const auto* c : {&s, &t})
        for (const auto& [l, r] : c->ranks()) {
            ds.insert(l);
            ds.insert(l + 1);
        }
    for (int l : ds) {
        const auto fl = Sparse<R>::of(f, l, t.rank(l), s.rank(l));
        const auto fl1 = Sparse<R>::of(f, l - 1, t.rank(l - 1), s.rank(l - 1));
        if (!(multiply(ring, Sparse<R>::of(t.differential(l)), fl) == multiply(ring, fl1, Sparse<R>::of(s.differential(l)))))
            fail(ErrorKind::Shape, what + " is not a chain map in internal degree " + std::to_string(l));
    }
}

// No truncation marker when every materialized level is zero.
inline std::optional<Truncation> bounded_by(Truncation::Side side, int last_known, std::optional<std::pair<int, int>> rows) {
    if (!rows) return std::nullopt;
    return Truncation{side, last_known, rows};
}

} // namespace detail

/// Levels X_0..X_d of a simplicial object in chain complexes with faces
/// d_i : X_n -> X_{n-1} (0 <= i <= n) and degeneracies s_i : X_n -> X_{n+1}
/// (0 <= i <= n, n < d). The simplicial identities are checked on construction.
/// Levels past d are not materialized; they are assumed to live in the same
/// range of internal degrees as X_0..X_d.
template <Ring R>
class SimplicialChainComplex {
public:
    SimplicialChainComplex() = default;

    /// faces[n] holds d_0..d_n for n >= 1 (faces[0] empty); degeneracies[n]
    /// holds s_0..s_n for n < d (degeneracies[d] empty).
    SimplicialChainComplex(R ring, std::vector<ChainComplex<R>> levels, std::vector<std::vector<LevelMap<R>>> faces,
                           std::vector<std::vector<LevelMap<R>>> degeneracies)
        : ring_(std::move(ring)), levels_(std::move(levels)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
        validate();
    }

    const R& ring() const { return ring_; }
    int truncation() const { return static_cast<int>(levels_.size()) - 1; }
    const ChainComplex<R>& level(int n) const { return levels_.at(n); }
    const std::vector<ChainComplex<R>>& levels() const { return levels_; }

    Matrix<R> face(int n, int i, int l) const {
        return detail::component(faces_.at(n).at(i), l, ring_, level(n - 1).rank(l), level(n).rank(l));
    }
    const LevelMap<R>& face_components(int n, int i) const { return faces_.at(n).at(i); }
    Matrix<R> degeneracy(int n, int i, int l) const {
        return detail::component(degeneracies_.at(n).at(i), l, ring_, level(n + 1).rank(l), level(n).rank(l));
    }

    std::set<int> internal_degrees() const { return detail::internal_degrees(levels_); }
    std::optional<std::pair<int, int>> internal_range() const { return detail::internal_range(levels_); }

    /// The object cut down to levels 0..d.
    SimplicialChainComplex truncated(int d) const {
        if (d > truncation()) fail(ErrorKind::InsufficientTruncation, "cannot extend a truncated simplicial object");
        std::vector<ChainComplex<R>> levels(levels_.begin(), levels_.begin() + d + 1);
        std::vector<std::vector<LevelMap<R>>> faces(faces_.begin(), faces_.begin() + d + 1);
        std::vector<std::vector<LevelMap<R>>> degs(degeneracies_.begin(), degeneracies_.begin() + d + 1);
        degs[d].clear();
        SimplicialChainComplex out;
        out.ring_ = ring_;
        out.levels_ = std::move(levels);
        out.faces_ = std::move(faces);
        out.degeneracies_ = std::move(degs);
        return out;
    }

    friend bool operator==(const SimplicialChainComplex& a, const SimplicialChainComplex& b) {
        return a.ring_ == b.ring_ && a.levels_ == b.levels_ && a.faces_ == b.faces_ && a.degeneracies_ == b.degeneracies_;
    }

private:
    void validate() const {
        const int d = truncation();
        if (d < 0) fail(ErrorKind::Shape, "simplicial object needs at least level 0");
        if (static_cast<int>(faces_.size()) != d + 1 || static_cast<int>(degeneracies_.size()) != d + 1)
            fail(ErrorKind::Shape, "simplicial object needs face and degeneracy lists for every level");
        for (const auto& x : levels_)
            if (!(x.ring() == ring_)) fail(ErrorKind::RingMismatch, "simplicial levels over different rings");
        for (int n = 0; n <= d; ++n) {
            if (static_cast<int>(faces_[n].size()) != (n == 0 ? 0 : n + 1))
                fail(ErrorKind::Shape, "level " + std::to_string(n) + " needs " + std::to_string(n == 0 ? 0 : n + 1) + " faces");
            if (static_cast<int>(degeneracies_[n].size()) != (n == d ? 0 : n + 1))
                fail(ErrorKind::Shape, "level " + std::to_string(n) + " needs " + std::to_string(n == d ? 0 : n + 1) + " degeneracies");
            for (int i = 0; i < static_cast<int>(faces_[n].size()); ++i)
                detail::check_chain_map(faces_[n][i], levels_[n], levels_[n - 1], "face d_" + std::to_string(i) + " on level " + std::to_string(n));
            for (int i = 0; i < static_cast<int>(degeneracies_[n].size()); ++i)
                detail::check_chain_map(degeneracies_[n][i], levels_[n], levels_[n + 1],
                                        "degeneracy s_" + std::to_string(i) + " on level " + std::to_string(n));
        }
        auto fail_identity = [](const std::string& which, int n, int l) {
            fail(ErrorKind::Shape, "simplicial identity " + which + " fails on level " + std::to_string(n) + " in internal degree " +
                                       std::to_string(l));
        };
        using S = detail::Sparse<R>;
        for (int l : internal_degrees()) {
            std::vector<std::vector<S>> fs(d + 1), ss(d + 1);
            for (int n = 0; n <= d; ++n) {
                for (int i = 0; i < static_cast<int>(faces_[n].size()); ++i)
                    fs[n].push_back(S::of(faces_[n][i], l, level(n - 1).rank(l), level(n).rank(l)));
                for (int i = 0; i < static_cast<int>(degeneracies_[n].size()); ++i)
                    ss[n].push_back(S::of(degeneracies_[n][i], l, level(n + 1).rank(l), level(n).rank(l)));
            }
            auto mul = [&](const S& a, const S& b) { return detail::multiply(ring_, a, b); };
            for (int n = 2; n <= d; ++n)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (!(mul(fs[n - 1][i], fs[n][j]) == mul(fs[n - 1][j - 1], fs[n][i]))) fail_identity("d_i d_j = d_{j-1} d_i", n, l);
            for (int n = 0; n < d; ++n)
                for (int j = 0; j <= n; ++j) {
                    const auto& s = ss[n][j];
                    for (int i = 0; i <= n + 1; ++i) {
                        const auto lhs = mul(fs[n + 1][i], s);
                        S rhs;
                        if (i < j)
                            rhs = mul(ss[n - 1][j - 1], fs[n][i]);
                        else if (i == j || i == j + 1)
                            rhs = S::identity(ring_, level(n).rank(l));
                        else
                            rhs = mul(ss[n - 1][j], fs[n][i - 1]);
                        if (!(lhs == rhs)) fail_identity("d_i s_j", n, l);
                    }
                    if (n + 1 < d)
                        for (int i = 0; i <= j; ++i)
                            if (!(mul(ss[n + 1][i], s) == mul(ss[n + 1][j + 1], ss[n][i]))) fail_identity("s_i s_j = s_{j+1} s_i", n, l);
                }
        }
    }

    R ring_{};
    std::vector<ChainComplex<R>> levels_;
    std::vector<std::vector<LevelMap<R>>> faces_;
    std::vector<std::vector<LevelMap<R>>> degeneracies_;
};

/// Levels X^0..X^d of a cosimplicial object with cofaces
/// delta^i : X^{n-1} -> X^n (0 <= i <= n) and codegeneracies
/// sigma^i : X^{n+1} -> X^n (0 <= i <= n, n < d).
template <Ring R>
class CosimplicialChainComplex {
public:
    CosimplicialChainComplex() = default;

    /// cofaces[n] holds delta^0..delta^n into level n >= 1 (cofaces[0] empty);
    /// codegeneracies[n] holds sigma^0..sigma^n into level n < d.
    CosimplicialChainComplex(R ring, std::vector<ChainComplex<R>> levels, std::vector<std::vector<LevelMap<R>>> cofaces,
                             std::vector<std::vector<LevelMap<R>>> codegeneracies)
        : ring_(std::move(ring)), levels_(std::move(levels)), cofaces_(std::move(cofaces)), codegeneracies_(std::move(codegeneracies)) {
        validate();
    }

    const R& ring() const { return ring_; }
    int truncation() const { return static_cast<int>(levels_.size()) - 1; }
    const ChainComplex<R>& level(int n) const { return levels_.at(n); }
    const std::vector<ChainComplex<R>>& levels() const { return levels_; }

    /// delta^i : X^{n-1} -> X^n
    Matrix<R> coface(int n, int i, int l) const {
        return detail::component(cofaces_.at(n).at(i), l, ring_, level(n).rank(l), level(n - 1).rank(l));
    }
    const LevelMap<R>& coface_components(int n, int i) const { return cofaces_.at(n).at(i); }
    /// sigma^i : X^{n+1} -> X^n
    Matrix<R> codegeneracy(int n, int i, int l) const {
        return detail::component(codegeneracies_.at(n).at(i), l, ring_, level(n).rank(l), level(n + 1).rank(l));
    }

    std::set<int> internal_degrees() const { return detail::internal_degrees(levels_); }
    std::optional<std::pair<int, int>> internal_range() const { return detail::internal_range(levels_); }

    friend bool operator==(const CosimplicialChainComplex& a, const CosimplicialChainComplex& b) {
        return a.ring_ == b.ring_ && a.levels_ == b.levels_ && a.cofaces_ == b.cofaces_ && a.codegeneracies_ == b.codegeneracies_;
    }

private:
    void validate() const {
        const int d = truncation();
        if (d < 0) fail(ErrorKind::Shape, "cosimplicial object needs at least level 0");
        if (static_cast<int>(cofaces_.size()) != d + 1 || static_cast<int>(codegeneracies_.size()) != d + 1)
            fail(ErrorKind::Shape, "cosimplicial object needs coface and codegeneracy lists for every level");
        for (const auto& x : levels_)
            if (!(x.ring() == ring_)) fail(ErrorKind::RingMismatch, "cosimplicial levels over different rings");
        for (int n = 0; n <= d; ++n) {
            if (static_cast<int>(cofaces_[n].size()) != (n == 0 ? 0 : n + 1))
                fail(ErrorKind::Shape, "level " + std::to_string(n) + " needs " + std::to_string(n == 0 ? 0 : n + 1) + " cofaces");
            if (static_cast<int>(codegeneracies_[n].size()) != (n == d ? 0 : n + 1))
                fail(ErrorKind::Shape, "level " + std::to_string(n) + " needs " + std::to_string(n == d ? 0 : n + 1) + " codegeneracies");
            for (int i = 0; i < static_cast<int>(cofaces_[n].size()); ++i)
                detail::check_chain_map(cofaces_[n][i], levels_[n - 1], levels_[n], "coface delta^" + std::to_string(i) + " into level " + std::to_string(n));
            for (int i = 0; i < static_cast<int>(codegeneracies_[n].size()); ++i)
                detail::check_chain_map(codegeneracies_[n][i], levels_[n + 1], levels_[n],
                                        "codegeneracy sigma^" + std::to_string(i) + " into level " + std::to_string(n));
        }
        auto fail_identity = [](const std::string& which, int n, int l) {
            fail(ErrorKind::Shape, "cosimplicial identity " + which + " fails at level " + std::to_string(n) + " in internal degree " +
                                       std::to_string(l));
        };
        using S = detail::Sparse<R>;
        for (int l : internal_degrees()) {
            std::vector<std::vector<S>> cf(d + 1), cd(d + 1);
            for (int n = 0; n <= d; ++n) {
                for (int i = 0; i < static_cast<int>(cofaces_[n].size()); ++i)
                    cf[n].push_back(S::of(cofaces_[n][i], l, level(n).rank(l), level(n - 1).rank(l)));
                for (int i = 0; i < static_cast<int>(codegeneracies_[n].size()); ++i)
                    cd[n].push_back(S::of(codegeneracies_[n][i], l, level(n).rank(l), level(n + 1).rank(l)));
            }
            auto mul = [&](const S& a, const S& b) { return detail::multiply(ring_, a, b); };
            // delta^j delta^i = delta^i delta^{j-1} (i < j), X^{n-1} -> X^{n+1}
            for (int n = 1; n < d; ++n)
                for (int j = 1; j <= n + 1; ++j)
                    for (int i = 0; i < j; ++i)
                        if (!(mul(cf[n + 1][j], cf[n][i]) == mul(cf[n + 1][i], cf[n][j - 1])))
                            fail_identity("delta^j delta^i = delta^i delta^{j-1}", n, l);
            // sigma^j delta^i : X^n -> X^{n+1} -> X^n
            for (int n = 0; n < d; ++n)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= n + 1; ++i) {
                        const auto lhs = mul(cd[n][j], cf[n + 1][i]);
                        S rhs;
                        if (i < j)
                            rhs = mul(cf[n][i], cd[n - 1][j - 1]);
                        else if (i == j || i == j + 1)
                            rhs = S::identity(ring_, level(n).rank(l));
                        else
                            rhs = mul(cf[n][i - 1], cd[n - 1][j]);
                        if (!(lhs == rhs)) fail_identity("sigma^j delta^i", n, l);
                    }
            // sigma^j sigma^i = sigma^i sigma^{j+1} (i <= j), X^{n+2} -> X^n
            for (int n = 0; n + 2 <= d; ++n)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i)
                        if (!(mul(cd[n][j], cd[n + 1][i]) == mul(cd[n][i], cd[n + 1][j + 1])))
                            fail_identity("sigma^j sigma^i = sigma^i sigma^{j+1}", n, l);
        }
    }

    R ring_{};
    std::vector<ChainComplex<R>> levels_;
    std::vector<std::vector<LevelMap<R>>> cofaces_;
    std::vector<std::vector<LevelMap<R>>> codegeneracies_;
};

namespace detail {

template <Ring R>
LevelMap<R> identity_components(const ChainComplex<R>& c) {
    LevelMap<R> out;
    for (const auto& [l, r] : c.ranks()) out[l] = Matrix<R>::identity(c.ring(), r);
    return out;
}

} // namespace detail

/// The constant simplicial object at C through level d: every structure map is the identity.
template <Ring R>
SimplicialChainComplex<R> constant_simplicial(const ChainComplex<R>& c, int d) {
    const auto id = detail::identity_components(c);
    std::vector<std::vector<LevelMap<R>>> faces(d + 1), degs(d + 1);
    for (int n = 0; n <= d; ++n) {
        if (n > 0) faces[n].assign(n + 1, id);
        if (n < d) degs[n].assign(n + 1, id);
    }
    return SimplicialChainComplex<R>(c.ring(), std::vector<ChainComplex<R>>(d + 1, c), std::move(faces), std::move(degs));
}

/// The constant cosimplicial object at C through level d.
template <Ring R>
CosimplicialChainComplex<R> constant_cosimplicial(const ChainComplex<R>& c, int d) {
    const auto id = detail::identity_components(c);
    std::vector<std::vector<LevelMap<R>>> cofaces(d + 1), codegs(d + 1);
    for (int n = 0; n <= d; ++n) {
        if (n > 0) cofaces[n].assign(n + 1, id);
        if (n < d) codegs[n].assign(n + 1, id);
    }
    return CosimplicialChainComplex<R>(c.ring(), std::vector<ChainComplex<R>>(d + 1, c), std::move(cofaces), std::move(codegs));
}

/// Moore double complex: M_{k,l} = (X_k)_l, d^h = sum_i (-1)^i d_i, d^v the
/// internal differential. Marked as truncated above level d.
template <Ring R>
DoubleComplex<R> moore(const SimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    std::map<Bidegree, std::size_t> ranks;
    std::map<Bidegree, Matrix<R>> h, v;
    for (int n = 0; n <= x.truncation(); ++n) {
        for (const auto& [l, r] : x.level(n).ranks()) {
            ranks[{n, l}] = r;
            v[{n, l}] = x.level(n).differential(l);
            if (n == 0) continue;
            Matrix<R> sum(ring, x.level(n - 1).rank(l), r);
            for (int i = 0; i <= n; ++i) detail::add_signed(sum, x.face_components(n, i), l, i);
            h[{n, l}] = sum;
        }
    }
    return DoubleComplex<R>(ring, ranks, h, v, detail::bounded_by(Truncation::Side::Above, x.truncation(), x.internal_range()));
}

/// A sub- or quotient double complex together with its comparison map.
template <Ring R>
struct DoubleComplexWithMap {
    DoubleComplex<R> complex;
    DoubleMap<R> map;
};

/// Normalized complex N_n = ker(d_1, ..., d_n) with d^h the restriction of
/// d_0; `map` is the inclusion N -> M.
template <Ring R>
DoubleComplexWithMap<R> normalized(const SimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    const auto m = moore(x);
    std::map<Bidegree, Summand<R>> ker;
    for (const auto& [b, r] : m.ranks()) {
        const auto [n, l] = b;
        if (n == 0) {
            const auto id = Matrix<R>::identity(ring, r);
            ker.emplace(b, Summand<R>{id, id, Matrix<R>(ring, r, 0), Matrix<R>(ring, 0, r)});
            continue;
        }
        Matrix<R> stacked(ring, 0, r);
        for (int i = 1; i <= n; ++i) stacked = vstack(stacked, x.face(n, i, l));
        ker.emplace(b, kernel_summand(stacked));
    }
    std::map<Bidegree, std::size_t> ranks;
    for (const auto& [b, s] : ker) ranks[b] = s.rank();
    std::map<Bidegree, Matrix<R>> h, v, incl;
    for (const auto& [b, s] : ker) {
        const auto [n, l] = b;
        incl[b] = s.basis;
        if (auto it = ker.find({n - 1, l}); it != ker.end()) h[b] = it->second.retraction * x.face(n, 0, l) * s.basis;
        if (auto it = ker.find({n, l - 1}); it != ker.end()) v[b] = it->second.retraction * m.vertical(n, l) * s.basis;
    }
    DoubleComplex<R> nc(ring, ranks, h, v, m.truncation());
    return {nc, DoubleMap<R>(nc, m, incl)};
}

/// Degenerate part D_n = image of (s_0, ..., s_{n-1}) in each bidegree, as a
/// direct summand of M_n.
template <Ring R>
std::map<Bidegree, Summand<R>> degenerate_sub(const SimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    std::map<Bidegree, Summand<R>> out;
    for (int n = 0; n <= x.truncation(); ++n)
        for (const auto& [l, r] : x.level(n).ranks()) {
            Matrix<R> gens(ring, r, 0);
            for (int i = 0; i < n; ++i) gens = hstack(gens, x.degeneracy(n - 1, i, l));
            out.emplace(Bidegree{n, l}, span_summand(gens));
        }
    return out;
}

/// M-bar = M / D in complement coordinates; `map` is the quotient M -> M-bar.
template <Ring R>
DoubleComplexWithMap<R> mbar(const SimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    const auto m = moore(x);
    const auto deg = degenerate_sub(x);
    std::map<Bidegree, std::size_t> ranks;
    for (const auto& [b, s] : deg) ranks[b] = s.ambient() - s.rank();
    std::map<Bidegree, Matrix<R>> h, v, quot;
    for (const auto& [b, s] : deg) {
        const auto [n, l] = b;
        quot[b] = s.quotient;
        if (auto it = deg.find({n - 1, l}); it != deg.end()) h[b] = it->second.quotient * m.horizontal(n, l) * s.complement;
        if (auto it = deg.find({n, l - 1}); it != deg.end()) v[b] = it->second.quotient * m.vertical(n, l) * s.complement;
    }
    DoubleComplex<R> mb(ring, ranks, h, v, m.truncation());
    return {mb, DoubleMap<R>(m, mb, quot)};
}

/// The composite N -> M -> M-bar, bidegree by bidegree.
template <Ring R>
DoubleMap<R> normalized_to_mbar(const SimplicialChainComplex<R>& x) {
    const auto n = normalized(x);
    const auto q = mbar(x);
    std::map<Bidegree, Matrix<R>> comps;
    for (const auto& [b, r] : n.complex.ranks()) comps[b] = q.map.component(b) * n.map.component(b);
    for (const auto& [b, r] : q.complex.ranks())
        if (!comps.count(b)) comps[b] = Matrix<R>(x.ring(), r, 0);
    return DoubleMap<R>(n.complex, q.complex, comps);
}

/// Whether every component of the composite N -> M -> M-bar is invertible.
template <Ring R>
bool normalized_to_mbar_is_iso(const SimplicialChainComplex<R>& x) {
    const auto f = normalized_to_mbar(x);
    std::set<Bidegree> support;
    for (const auto& [b, r] : f.source().ranks()) support.insert(b);
    for (const auto& [b, r] : f.target().ranks()) support.insert(b);
    for (const auto& b : support)
        if (!is_unimodular(f.component(b))) return false;
    return true;
}

/// Cosimplicial Moore complex: X^n sits in column -n, d^h = sum_i (-1)^i delta^i.
/// Marked as truncated below column -d.
template <Ring R>
DoubleComplex<R> moore_cosimplicial(const CosimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    std::map<Bidegree, std::size_t> ranks;
    std::map<Bidegree, Matrix<R>> h, v;
    for (int n = 0; n <= x.truncation(); ++n)
        for (const auto& [l, r] : x.level(n).ranks()) {
            ranks[{-n, l}] = r;
            v[{-n, l}] = x.level(n).differential(l);
            if (n == x.truncation()) continue;
            Matrix<R> sum(ring, x.level(n + 1).rank(l), r);
            for (int i = 0; i <= n + 1; ++i) detail::add_signed(sum, x.coface_components(n + 1, i), l, i);
            h[{-n, l}] = sum;
        }
    return DoubleComplex<R>(ring, ranks, h, v, detail::bounded_by(Truncation::Side::Below, -x.truncation(), x.internal_range()));
}

/// Cosimplicial normalization X^n / (im delta^0 + ... + im delta^{n-1}) in
/// complement coordinates; `map` is the projection M -> N.
template <Ring R>
DoubleComplexWithMap<R> normalized_cosimplicial(const CosimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    const auto m = moore_cosimplicial(x);
    std::map<Bidegree, Summand<R>> img;
    for (int n = 0; n <= x.truncation(); ++n)
        for (const auto& [l, r] : x.level(n).ranks()) {
            Matrix<R> gens(ring, r, 0);
            for (int i = 0; i < n; ++i) gens = hstack(gens, x.coface(n, i, l));
            img.emplace(Bidegree{-n, l}, span_summand(gens));
        }
    std::map<Bidegree, std::size_t> ranks;
    for (const auto& [b, s] : img) ranks[b] = s.ambient() - s.rank();
    std::map<Bidegree, Matrix<R>> h, v, proj;
    for (const auto& [b, s] : img) {
        const auto [k, l] = b;
        proj[b] = s.quotient;
        if (auto it = img.find({k - 1, l}); it != img.end()) h[b] = it->second.quotient * m.horizontal(k, l) * s.complement;
        if (auto it = img.find({k, l - 1}); it != img.end()) v[b] = it->second.quotient * m.vertical(k, l) * s.complement;
    }
    DoubleComplex<R> nc(ring, ranks, h, v, m.truncation());
    return {nc, DoubleMap<R>(m, nc, proj)};
}

/// Cosimplicial M-bar = ker(sigma^0, ..., sigma^{n-1}); `map` is the inclusion M-bar -> M.
template <Ring R>
DoubleComplexWithMap<R> mbar_cosimplicial(const CosimplicialChainComplex<R>& x) {
    const R& ring = x.ring();
    const auto m = moore_cosimplicial(x);
    std::map<Bidegree, Summand<R>> ker;
    for (int n = 0; n <= x.truncation(); ++n)
        for (const auto& [l, r] : x.level(n).ranks()) {
            Matrix<R> stacked(ring, 0, r);
            for (int i = 0; i < n; ++i) stacked = vstack(stacked, x.codegeneracy(n - 1, i, l));
            ker.emplace(Bidegree{-n, l}, kernel_summand(stacked));
        }
    std::map<Bidegree, std::size_t> ranks;
    for (const auto& [b, s] : ker) ranks[b] = s.rank();
    std::map<Bidegree, Matrix<R>> h, v, incl;
    for (const auto& [b, s] : ker) {
        const auto [k, l] = b;
        incl[b] = s.basis;
        if (auto it = ker.find({k - 1, l}); it != ker.end()) h[b] = it->second.retraction * m.horizontal(k, l) * s.basis;
        if (auto it = ker.find({k, l - 1}); it != ker.end()) v[b] = it->second.retraction * m.vertical(k, l) * s.basis;
    }
    DoubleComplex<R> mb(ring, ranks, h, v, m.truncation());
    return {mb, DoubleMap<R>(mb, m, incl)};
}

} // namespace hocolim
