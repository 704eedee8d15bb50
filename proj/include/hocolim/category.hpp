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

struct MorphismSpec {
    std::string name;
    std::string source;
    std::string target;
};

/// g . f = h, named.
struct CompositeSpec {
    std::string g;
    std::string f;
    std::string result;
};

/// Finite category with explicit objects, morphisms (identities included) and
/// a total composition table. Objects and morphisms are kept sorted by name,
/// which fixes every downstream basis order.
class FiniteCategory {
public:
    FiniteCategory() = default;

    /// `identities` maps each object to the name of its identity morphism,
    /// which must appear in `morphisms`. Composites with an identity follow
    /// from the unit laws and may be omitted; every other composable pair
    /// must be listed.
    FiniteCategory(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms, const std::map<std::string, std::string>& identities,
                   const std::vector<CompositeSpec>& composites) {
        std::sort(objects.begin(), objects.end());
        for (std::size_t i = 1; i < objects.size(); ++i)
            if (objects[i] == objects[i - 1]) fail(ErrorKind::Shape, "object " + objects[i] + " declared twice");
        objects_ = std::move(objects);
        std::sort(morphisms.begin(), morphisms.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        for (const auto& m : morphisms) {
            if (!morphisms_.empty() && morphisms_.back().name == m.name) fail(ErrorKind::Shape, "morphism " + m.name + " declared twice");
            morphisms_.push_back({m.name, object_index(m.source), object_index(m.target)});
        }
        identity_.assign(objects_.size(), 0);
        for (std::size_t o = 0; o < objects_.size(); ++o) {
            auto it = identities.find(objects_[o]);
            if (it == identities.end()) fail(ErrorKind::Shape, "object " + objects_[o] + " has no identity");
            const std::size_t id = morphism_index(it->second);
            if (morphisms_[id].source != o || morphisms_[id].target != o)
                fail(ErrorKind::Shape, "identity " + it->second + " of " + objects_[o] + " is not an endomorphism of it");
            identity_[o] = id;
        }
        for (const auto& [obj, id] : identities) object_index(obj);
        std::vector<bool> is_identity(morphisms_.size(), false);
        for (auto id : identity_) {
            if (is_identity[id]) fail(ErrorKind::Shape, "morphism " + morphisms_[id].name + " is the identity of two objects");
            is_identity[id] = true;
        }
        for (const auto& c : composites) {
            const auto g = morphism_index(c.g), f = morphism_index(c.f), h = morphism_index(c.result);
            if (morphisms_[f].target != morphisms_[g].source)
                fail(ErrorKind::Shape, "composite " + c.g + " . " + c.f + " of non-composable morphisms");
            if (morphisms_[h].source != morphisms_[f].source || morphisms_[h].target != morphisms_[g].target)
                fail(ErrorKind::Shape, "composite " + c.g + " . " + c.f + " = " + c.result + " has the wrong source or target");
            auto [it, fresh] = compose_.emplace(std::pair{g, f}, h);
            if (!fresh && it->second != h) fail(ErrorKind::Shape, "composite " + c.g + " . " + c.f + " given twice");
        }
        for (std::size_t f = 0; f < morphisms_.size(); ++f) {
            auto unit = [&](std::size_t g, std::size_t ff) {
                auto [it, fresh] = compose_.emplace(std::pair{g, ff}, f);
                if (!fresh && it->second != f)
                    fail(ErrorKind::Shape, "composite " + morphisms_[g].name + " . " + morphisms_[ff].name + " violates the unit law");
            };
            unit(identity_[morphisms_[f].target], f);
            unit(f, identity_[morphisms_[f].source]);
        }
        for (std::size_t f = 0; f < morphisms_.size(); ++f)
            for (std::size_t g = 0; g < morphisms_.size(); ++g)
                if (morphisms_[f].target == morphisms_[g].source && !compose_.count({g, f}))
                    fail(ErrorKind::Shape, "composite " + morphisms_[g].name + " . " + morphisms_[f].name + " is missing");
        for (std::size_t f = 0; f < morphisms_.size(); ++f)
            for (std::size_t g = 0; g < morphisms_.size(); ++g) {
                if (morphisms_[f].target != morphisms_[g].source) continue;
                for (std::size_t h = 0; h < morphisms_.size(); ++h) {
                    if (morphisms_[g].target != morphisms_[h].source) continue;
                    if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                        fail(ErrorKind::Shape, "composition is not associative on " + morphisms_[f].name + ", " + morphisms_[g].name + ", " +
                                                   morphisms_[h].name);
                }
            }
    }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const std::string& object_name(std::size_t o) const { return objects_.at(o); }
    const std::string& morphism_name(std::size_t m) const { return morphisms_.at(m).name; }
    std::size_t source(std::size_t m) const { return morphisms_.at(m).source; }
    std::size_t target(std::size_t m) const { return morphisms_.at(m).target; }
    std::size_t identity(std::size_t o) const { return identity_.at(o); }
    bool is_identity(std::size_t m) const { return identity_.at(source(m)) == m; }

    std::size_t compose(std::size_t g, std::size_t f) const {
        auto it = compose_.find({g, f});
        if (it == compose_.end()) fail(ErrorKind::Shape, "morphisms " + morphism_name(g) + " and " + morphism_name(f) + " are not composable");
        return it->second;
    }

    std::size_t object_index(const std::string& name) const {
        auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
        if (it == objects_.end() || *it != name) fail(ErrorKind::Resolution, "unknown object " + name);
        return static_cast<std::size_t>(it - objects_.begin());
    }

    std::size_t morphism_index(const std::string& name) const {
        auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), name, [](const auto& m, const std::string& n) { return m.name < n; });
        if (it == morphisms_.end() || it->name != name) fail(ErrorKind::Resolution, "unknown morphism " + name);
        return static_cast<std::size_t>(it - morphisms_.begin());
    }

    /// Composable pairs (f, g) with target(f) = source(g), used for checking functors.
    std::vector<std::pair<std::size_t, std::size_t>> composable_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t f = 0; f < morphisms_.size(); ++f)
            for (std::size_t g = 0; g < morphisms_.size(); ++g)
                if (target(f) == source(g)) out.emplace_back(f, g);
        return out;
    }

    /// The declared composites that are not forced by the unit laws, as (g, f, g . f).
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> nontrivial_composites() const {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const auto& [gf, h] : compose_)
            if (!is_identity(gf.first) && !is_identity(gf.second)) out.emplace_back(gf.first, gf.second, h);
        return out;
    }

    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
        return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identity_ == b.identity_ && a.compose_ == b.compose_;
    }

private:
    struct Morphism {
        std::string name;
        std::size_t source;
        std::size_t target;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identity_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose_;
};

/// An n-simplex of the nerve: a chain of n composable morphisms (identities
/// allowed). For n = 0 it is an object.
struct NerveSimplex {
    std::size_t object = 0;
    std::vector<std::size_t> morphisms;

    std::size_t dimension() const { return morphisms.size(); }

    friend bool operator==(const NerveSimplex&, const NerveSimplex&) = default;
    friend auto operator<=>(const NerveSimplex&, const NerveSimplex&) = default;
};

/// First vertex of a chain.
inline std::size_t chain_source(const FiniteCategory& c, const NerveSimplex& s) {
    return s.morphisms.empty() ? s.object : c.source(s.morphisms.front());
}

/// Last vertex of a chain.
inline std::size_t chain_target(const FiniteCategory& c, const NerveSimplex& s) {
    return s.morphisms.empty() ? s.object : c.target(s.morphisms.back());
}

/// Vertex i of a chain x_0 -> x_1 -> ... -> x_n.
inline std::size_t chain_vertex(const FiniteCategory& c, const NerveSimplex& s, std::size_t i) {
    if (s.morphisms.empty()) return s.object;
    return i == 0 ? c.source(s.morphisms.front()) : c.target(s.morphisms[i - 1]);
}

inline std::string to_string(const FiniteCategory& c, const NerveSimplex& s) {
    if (s.morphisms.empty()) return c.object_name(s.object);
    std::string out;
    for (auto m : s.morphisms) out += (out.empty() ? "" : ",") + c.morphism_name(m);
    return "(" + out + ")";
}

/// d_i of a chain: drop the first or last arrow, or compose arrows i and i+1.
inline NerveSimplex nerve_face(const FiniteCategory& c, const NerveSimplex& s, std::size_t i) {
    const std::size_t n = s.dimension();
    if (n == 0 || i > n) fail(ErrorKind::IndexOutOfRange, "face d_" + std::to_string(i) + " of a " + std::to_string(n) + "-simplex");
    if (n == 1) return {i == 0 ? c.target(s.morphisms[0]) : c.source(s.morphisms[0]), {}};
    NerveSimplex out{0, {}};
    if (i == 0) {
        out.morphisms.assign(s.morphisms.begin() + 1, s.morphisms.end());
    } else if (i == n) {
        out.morphisms.assign(s.morphisms.begin(), s.morphisms.end() - 1);
    } else {
        out.morphisms = s.morphisms;
        out.morphisms[i - 1] = c.compose(s.morphisms[i], s.morphisms[i - 1]);
        out.morphisms.erase(out.morphisms.begin() + static_cast<long>(i));
    }
    out.object = c.source(out.morphisms.front());
    return out;
}

/// s_i of a chain: insert the identity of vertex i after arrow i.
inline NerveSimplex nerve_degeneracy(const FiniteCategory& c, const NerveSimplex& s, std::size_t i) {
    if (i > s.dimension()) fail(ErrorKind::IndexOutOfRange, "degeneracy s_" + std::to_string(i) + " of a " + std::to_string(s.dimension()) + "-simplex");
    NerveSimplex out{chain_source(c, s), s.morphisms};
    out.morphisms.insert(out.morphisms.begin() + static_cast<long>(i), c.identity(chain_vertex(c, s, i)));
    return out;
}

/// All length-n chains, lexicographic in morphism names; n = 0 gives the objects.
inline std::vector<NerveSimplex> nerve_simplices(const FiniteCategory& c, int n) {
    std::vector<NerveSimplex> out;
    if (n < 0) return out;
    if (n == 0) {
        for (std::size_t o = 0; o < c.object_count(); ++o) out.push_back({o, {}});
        return out;
    }
    std::vector<std::size_t> cur;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back({c.source(cur.front()), cur});
            return;
        }
        for (std::size_t m = 0; m < c.morphism_count(); ++m) {
            if (!cur.empty() && c.source(m) != c.target(cur.back())) continue;
            cur.push_back(m);
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

/// Nondegenerate chains: no identity morphism appears.
inline std::vector<NerveSimplex> nondegenerate_nerve_simplices(const FiniteCategory& c, int n) {
    auto all = nerve_simplices(c, n);
    std::erase_if(all, [&](const NerveSimplex& s) {
        return std::any_of(s.morphisms.begin(), s.morphisms.end(), [&](std::size_t m) { return c.is_identity(m); });
    });
    return all;
}

/// A witness that a category is not loop-free: a nonidentity endomorphism or
/// a cycle of nonidentity morphisms, described by name.
inline std::optional<std::string> loop_witness(const FiniteCategory& c) {
    for (std::size_t m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m) && c.source(m) == c.target(m))
            return "nonidentity endomorphism " + c.morphism_name(m) + " of " + c.object_name(c.source(m));
    // Depth-first search for a directed cycle among objects.
    const std::size_t n = c.object_count();
    std::vector<int> state(n, 0);
    std::vector<std::size_t> via(n, 0), parent(n, 0);
    std::optional<std::string> found;
    auto visit = [&](auto&& self, std::size_t o) -> void {
        state[o] = 1;
        for (std::size_t m = 0; m < c.morphism_count() && !found; ++m) {
            if (c.is_identity(m) || c.source(m) != o) continue;
            const std::size_t t = c.target(m);
            if (state[t] == 1) {
                std::vector<std::string> names{c.morphism_name(m)};
                for (std::size_t x = o; x != t; x = parent[x]) names.push_back(c.morphism_name(via[x]));
                std::string cycle;
                for (auto it = names.rbegin(); it != names.rend(); ++it) cycle += (cycle.empty() ? "" : ", ") + *it;
                found = "cycle of nonidentity morphisms " + cycle;
            } else if (state[t] == 0) {
                parent[t] = o;
                via[t] = m;
                self(self, t);
            }
        }
        state[o] = 2;
    };
    for (std::size_t o = 0; o < n && !found; ++o)
        if (state[o] == 0) visit(visit, o);
    return found;
}

inline bool is_loop_free(const FiniteCategory& c) { return !loop_witness(c); }

/// Largest n with a nondegenerate n-simplex in the nerve; only meaningful
/// (and finite) for loop-free categories.
inline int nondegenerate_dimension(const FiniteCategory& c) {
    if (auto w = loop_witness(c)) fail(ErrorKind::LoopsInIndexCategory, "nerve has nondegenerate simplices in every dimension: " + *w);
    // Longest path in the DAG of nonidentity morphisms.
    std::vector<int> longest(c.object_count(), 0);
    for (std::size_t round = 0; round < c.object_count(); ++round)
        for (std::size_t m = 0; m < c.morphism_count(); ++m)
            if (!c.is_identity(m)) longest[c.target(m)] = std::max(longest[c.target(m)], longest[c.source(m)] + 1);
    return longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
}

/// A functor I -> Ch(R): a complex per object and a chain map per morphism.
template <Ring R>
struct Diagram {
    FiniteCategory index;
    std::vector<ChainComplex<R>> objects;
    std::vector<ChainMap<R>> morphisms;

    const ChainComplex<R>& at(std::size_t o) const { return objects.at(o); }
    const ChainMap<R>& on(std::size_t m) const { return morphisms.at(m); }

    const R& ring() const {
        if (objects.empty()) fail(ErrorKind::InvalidDiagram, "diagram over the empty category has no ring");
        return objects.front().ring();
    }

    /// Lowest degree of any value, if some value is nonzero.
    std::optional<int> min_degree() const {
        std::optional<int> lo;
        for (const auto& c : objects)
            if (auto d = c.min_degree()) lo = lo ? std::min(*lo, *d) : *d;
        return lo;
    }
    std::optional<int> max_degree() const {
        std::optional<int> hi;
        for (const auto& c : objects)
            if (auto d = c.max_degree()) hi = hi ? std::max(*hi, *d) : *d;
        return hi;
    }
};

/// Every failure of functoriality, each naming its witness.
template <Ring R>
std::vector<std::string> validate(const Diagram<R>& f) {
    std::vector<std::string> out;
    const auto& c = f.index;
    if (f.objects.size() != c.object_count()) {
        out.push_back("diagram assigns " + std::to_string(f.objects.size()) + " complexes to " + std::to_string(c.object_count()) + " objects");
        return out;
    }
    if (f.morphisms.size() != c.morphism_count()) {
        out.push_back("diagram assigns " + std::to_string(f.morphisms.size()) + " maps to " + std::to_string(c.morphism_count()) + " morphisms");
        return out;
    }
    bool shapes_ok = true;
    for (std::size_t m = 0; m < c.morphism_count(); ++m) {
        if (!(f.on(m).source() == f.at(c.source(m))) || !(f.on(m).target() == f.at(c.target(m)))) {
            out.push_back("F(" + c.morphism_name(m) + ") does not go from F(" + c.object_name(c.source(m)) + ") to F(" +
                          c.object_name(c.target(m)) + ")");
            shapes_ok = false;
        }
    }
    if (!shapes_ok) return out;
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (!(f.on(c.identity(o)) == ChainMap<R>::identity(f.at(o))))
            out.push_back("F(" + c.morphism_name(c.identity(o)) + ") is not the identity of F(" + c.object_name(o) + ")");
    for (const auto& [a, b] : c.composable_pairs()) {
        if (c.is_identity(a) || c.is_identity(b)) continue;
        if (!(f.on(c.compose(b, a)) == compose(f.on(b), f.on(a))))
            out.push_back("F(" + c.morphism_name(b) + " . " + c.morphism_name(a) + ") != F(" + c.morphism_name(b) + ") F(" +
                          c.morphism_name(a) + ") for the pair (" + c.morphism_name(a) + ", " + c.morphism_name(b) + ")");
    }
    return out;
}

template <Ring R>
void require_valid(const Diagram<R>& f) {
    const auto v = validate(f);
    if (v.empty()) return;
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "; ") + s;
    fail(ErrorKind::InvalidDiagram, msg);
}

/// The constant diagram at C.
template <Ring R>
Diagram<R> constant_diagram(const FiniteCategory& c, const ChainComplex<R>& value) {
    Diagram<R> f{c, std::vector<ChainComplex<R>>(c.object_count(), value), {}};
    for (std::size_t m = 0; m < c.morphism_count(); ++m) f.morphisms.push_back(ChainMap<R>::identity(value));
    return f;
}

namespace categories {

/// Objects and identities only; identities are named id_<object>.
inline FiniteCategory discrete(const std::vector<std::string>& objects) {
    std::vector<MorphismSpec> ms;
    std::map<std::string, std::string> ids;
    for (const auto& o : objects) {
        ms.push_back({"id_" + o, o, o});
        ids[o] = "id_" + o;
    }
    return FiniteCategory(objects, ms, ids, {});
}

/// The span b <-v- c -u-> a.
inline FiniteCategory span() {
    return FiniteCategory({"a", "b", "c"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"u", "c", "a"}, {"v", "c", "b"}},
                          {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}}, {});
}

/// The cospan a -u-> c <-v- b.
inline FiniteCategory cospan() {
    return FiniteCategory({"a", "b", "c"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"u", "a", "c"}, {"v", "b", "c"}},
                          {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}}, {});
}

/// The poset 0 < 1 < ... < n with morphisms "i<j" and identities "id_i".
inline FiniteCategory linear_order(int n) {
    std::vector<std::string> objs;
    std::vector<MorphismSpec> ms;
    std::map<std::string, std::string> ids;
    std::vector<CompositeSpec> comps;
    auto arrow = [](int i, int j) { return std::to_string(i) + "<" + std::to_string(j); };
    for (int i = 0; i <= n; ++i) {
        objs.push_back(std::to_string(i));
        ms.push_back({"id_" + std::to_string(i), std::to_string(i), std::to_string(i)});
        ids[std::to_string(i)] = "id_" + std::to_string(i);
        for (int j = i + 1; j <= n; ++j) ms.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) comps.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
    return FiniteCategory(objs, ms, ids, comps);
}

/// The cyclic group Z/n as a one-object category: object "*", morphisms
/// "e" (identity) and "g1".."g{n-1}" with g_i g_j = g_{i+j mod n}.
inline FiniteCategory cyclic_group(int n) {
    if (n < 1) fail(ErrorKind::IndexOutOfRange, "cyclic group of order " + std::to_string(n));
    std::vector<MorphismSpec> ms{{"e", "*", "*"}};
    auto name = [](int i) { return i == 0 ? std::string("e") : "g" + std::to_string(i); };
    for (int i = 1; i < n; ++i) ms.push_back({name(i), "*", "*"});
    std::vector<CompositeSpec> comps;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) comps.push_back({name(i), name(j), name((i + j) % n)});
    return FiniteCategory({"*"}, ms, {{"*", "e"}}, comps);
}

} // namespace categories

} // namespace hocolim
