#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hocolim/chain_complex.hpp"

namespace hocolim {

/// A simplex s_{j1} ... s_{jr} y of a simplicial set in Eilenberg-Zilber
/// form: y is nondegenerate of dimension `base_dim`, and the degeneracy word
/// is strictly decreasing (j1 > j2 > ... > jr).
struct Simplex {
    std::vector<int> degeneracies;
    int base_dim = 0;
    std::size_t base = 0;

    int dim() const { return base_dim + static_cast<int>(degeneracies.size()); }
    bool nondegenerate() const { return degeneracies.empty(); }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Rewrites a degeneracy word into strictly decreasing form using
/// s_i s_j = s_{j+1} s_i for i <= j.
inline std::vector<int> canonical_degeneracies(std::vector<int> word) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] <= word[p + 1]) {
                const int i = word[p], j = word[p + 1];
                word[p] = j + 1;
                word[p + 1] = i;
                changed = true;
            }
        }
    }
    return word;
}

/// Simplicial set with finitely many nondegenerate simplices, all of
/// dimension <= d_max. Only nondegenerate simplices are stored; each of their
/// faces is recorded in canonical form.
class FiniteSimplicialSet {
public:
    FiniteSimplicialSet() = default;

    /// `names[n]` lists the nondegenerate n-simplices in basis order and
    /// `faces[n][x]` holds d_0 x, ..., d_n x for n >= 1 (faces[0] is ignored).
    FiniteSimplicialSet(std::vector<std::vector<std::string>> names, std::vector<std::vector<std::vector<Simplex>>> faces)
        : names_(std::move(names)), faces_(std::move(faces)) {
        faces_.resize(names_.size());
        validate();
    }

    int d_max() const { return static_cast<int>(names_.size()) - 1; }

    std::size_t count(int n) const { return (n < 0 || n > d_max()) ? 0 : names_[n].size(); }

    const std::string& name(int n, std::size_t x) const { return names_.at(n).at(x); }

    std::optional<std::size_t> find(int n, const std::string& name) const {
        if (n < 0 || n > d_max()) return std::nullopt;
        auto it = std::find(names_[n].begin(), names_[n].end(), name);
        if (it == names_[n].end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_[n].begin());
    }

    /// Stored face of a nondegenerate simplex.
    const Simplex& nondegenerate_face(int n, std::size_t x, int i) const { return faces_.at(n).at(x).at(i); }

    /// d_i of an arbitrary simplex, pushed through the degeneracy word with
    ///   d_i s_j = s_{j-1} d_i (i < j),  id (i = j, j+1),  s_j d_{i-1} (i > j+1).
    Simplex face(const Simplex& x, int i) const {
        if (i < 0 || i > x.dim() || x.dim() == 0) fail(ErrorKind::IndexOutOfRange, "face d_" + std::to_string(i) + " of a " + std::to_string(x.dim()) + "-simplex");
        std::vector<int> emitted;
        for (std::size_t k = 0; k < x.degeneracies.size(); ++k) {
            const int j = x.degeneracies[k];
            if (i < j) {
                emitted.push_back(j - 1);
            } else if (i == j || i == j + 1) {
                emitted.insert(emitted.end(), x.degeneracies.begin() + k + 1, x.degeneracies.end());
                return {canonical_degeneracies(emitted), x.base_dim, x.base};
            } else {
                emitted.push_back(j);
                --i;
            }
        }
        const Simplex& f = nondegenerate_face(x.base_dim, x.base, i);
        emitted.insert(emitted.end(), f.degeneracies.begin(), f.degeneracies.end());
        return {canonical_degeneracies(emitted), f.base_dim, f.base};
    }

    Simplex degeneracy(const Simplex& x, int i) const {
        if (i < 0 || i > x.dim()) fail(ErrorKind::IndexOutOfRange, "degeneracy s_" + std::to_string(i) + " of a " + std::to_string(x.dim()) + "-simplex");
        std::vector<int> word{i};
        word.insert(word.end(), x.degeneracies.begin(), x.degeneracies.end());
        return {canonical_degeneracies(word), x.base_dim, x.base};
    }

    /// Every n-simplex, degenerate ones included: nondegenerate bases by
    /// descending dimension, then declared order, then degeneracy words in
    /// lexicographic order.
    std::vector<Simplex> all_simplices(int n) const {
        std::vector<Simplex> out;
        for (int m = std::min(n, d_max()); m >= 0; --m) {
            std::vector<std::vector<int>> words;
            std::vector<int> cur;
            decreasing_words(n - 1, n - m, cur, words);
            std::sort(words.begin(), words.end());
            for (std::size_t y = 0; y < count(m); ++y)
                for (const auto& w : words) out.push_back({w, m, y});
        }
        return out;
    }

    friend bool operator==(const FiniteSimplicialSet&, const FiniteSimplicialSet&) = default;

private:
    static void decreasing_words(int top, int length, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int j = top; j >= 0; --j) {
            cur.push_back(j);
            decreasing_words(j - 1, length, cur, out);
            cur.pop_back();
        }
    }

    void validate() const {
        for (int n = 1; n <= d_max(); ++n) {
            for (std::size_t x = 0; x < count(n); ++x) {
                const auto& fs = faces_[n].size() > x ? faces_[n][x] : std::vector<Simplex>{};
                if (static_cast<int>(fs.size()) != n + 1)
                    fail(ErrorKind::Shape, "simplex " + names_[n][x] + " needs " + std::to_string(n + 1) + " faces");
                for (const auto& f : fs) {
                    if (f.dim() != n - 1 || f.base >= count(f.base_dim) || f.degeneracies != canonical_degeneracies(f.degeneracies) ||
                        (!f.degeneracies.empty() && f.degeneracies.front() > n - 2))
                        fail(ErrorKind::Shape, "malformed face of simplex " + names_[n][x]);
                }
            }
        }
        for (int n = 2; n <= d_max(); ++n)
            for (std::size_t x = 0; x < count(n); ++x) {
                const Simplex s{{}, n, x};
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (!(face(face(s, j), i) == face(face(s, i), j - 1)))
                            fail(ErrorKind::Shape, "simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                                       " fails on " + names_[n][x]);
            }
    }

    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
};

namespace detail {

inline std::string vertex_name(const std::vector<int>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
}

/// Simplicial set of a downward-closed family of vertex subsets of [n]
/// (ordered simplicial complex). Simplices are named by vertex lists and
/// ordered lexicographically within each dimension.
template <class Keep>
FiniteSimplicialSet ordered_complex(int n, Keep keep) {
    std::vector<std::vector<std::vector<int>>> by_dim(n + 1);
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v <= n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        if (keep(vs)) by_dim[vs.size() - 1].push_back(vs);
    }
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    std::vector<std::vector<std::string>> names(by_dim.size());
    std::vector<std::vector<std::vector<Simplex>>> faces(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        for (const auto& vs : by_dim[d]) {
            names[d].push_back(vertex_name(vs));
            if (d == 0) {
                faces[d].emplace_back();
                continue;
            }
            std::vector<Simplex> fs;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                auto f = vs;
                f.erase(f.begin() + static_cast<long>(i));
                auto it = std::lower_bound(by_dim[d - 1].begin(), by_dim[d - 1].end(), f);
                if (it == by_dim[d - 1].end() || *it != f) fail(ErrorKind::Shape, "vertex family is not closed under faces");
                fs.push_back({{}, static_cast<int>(d - 1), static_cast<std::size_t>(it - by_dim[d - 1].begin())});
            }
            faces[d].push_back(fs);
        }
    }
    return FiniteSimplicialSet(std::move(names), std::move(faces));
}

} // namespace detail

/// The standard n-simplex.
inline FiniteSimplicialSet simplex(int n) {
    if (n < 0) fail(ErrorKind::IndexOutOfRange, "simplex(" + std::to_string(n) + ")");
    return detail::ordered_complex(n, [](const std::vector<int>&) { return true; });
}

/// The boundary of the n-simplex (all proper faces).
inline FiniteSimplicialSet boundary(int n) {
    if (n < 1) fail(ErrorKind::IndexOutOfRange, "boundary(" + std::to_string(n) + ") needs n >= 1");
    return detail::ordered_complex(n, [n](const std::vector<int>& vs) { return static_cast<int>(vs.size()) <= n; });
}

/// The horn: boundary of the n-simplex minus the face opposite vertex k.
inline FiniteSimplicialSet horn(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        fail(ErrorKind::IndexOutOfRange, "horn(" + std::to_string(n) + ", " + std::to_string(k) + ") needs n >= 1, 0 <= k <= n");
    return detail::ordered_complex(n, [n, k](const std::vector<int>& vs) {
        if (static_cast<int>(vs.size()) == n + 1) return false;
        if (static_cast<int>(vs.size()) == n && std::find(vs.begin(), vs.end(), k) == vs.end()) return false;
        return true;
    });
}

/// Delta^1 / boundary: one vertex, one edge whose two faces coincide.
inline FiniteSimplicialSet circle() {
    return FiniteSimplicialSet({{"v"}, {"e"}}, {{{}}, {{Simplex{{}, 0, 0}, Simplex{{}, 0, 0}}}});
}

/// Normalized chains N_*(K) through degree d: free on nondegenerate
/// simplices, d = sum (-1)^i d_i with degenerate faces dropped.
template <Ring R>
ChainComplex<R> normalized_chains(const FiniteSimplicialSet& k, int d, const R& ring = R{}) {
    if (d > k.d_max()) fail(ErrorKind::TruncationExceeded, "degree " + std::to_string(d) + " above d_max " + std::to_string(k.d_max()));
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix<R>> diffs;
    for (int n = 0; n <= d; ++n) ranks[n] = k.count(n);
    for (int n = 1; n <= d; ++n) {
        Matrix<R> m(ring, k.count(n - 1), k.count(n));
        for (std::size_t x = 0; x < k.count(n); ++x)
            for (int i = 0; i <= n; ++i) {
                const Simplex& f = k.nondegenerate_face(n, x, i);
                if (!f.nondegenerate()) continue;
                m(f.base, x) = (i % 2 == 0) ? ring.add(m(f.base, x), ring.one()) : ring.sub(m(f.base, x), ring.one());
            }
        diffs[n] = m;
    }
    return ChainComplex<R>(ring, ranks, diffs);
}

template <Ring R>
ChainComplex<R> normalized_chains(const FiniteSimplicialSet& k, const R& ring = R{}) {
    return normalized_chains<R>(k, k.d_max(), ring);
}

} // namespace hocolim
