#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>

#include "hocolim/bar_cobar.hpp"
#include "hocolim/dsl/manifest.hpp"

namespace hocolim::dsl {

/// Every declaration of a manifest resolved over the ring R.
template <Ring R>
struct Environment {
    R ring;
    std::map<std::string, Matrix<R>> matrices;
    std::map<std::string, ChainComplex<R>> complexes;
    std::map<std::string, ChainMap<R>> maps;
    std::map<std::string, FiniteCategory> categories;
    std::map<std::string, Diagram<R>> diagrams;
    std::map<std::string, FiniteSimplicialSet> simplicial_sets;
    std::map<std::string, SimplicialChainComplex<R>> simplicial;
};

namespace detail {

// Reruns `body`, prefixing engine errors with the declaration's position.
// Kinds outside the DSL's four validation kinds are reported as Shape, or
// as Functoriality for diagram problems.
template <class F>
auto located(const Position& at, const std::string& what, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::string msg = e.what();
        if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
        ErrorKind kind = e.kind();
        if (kind == ErrorKind::InvalidDiagram) kind = ErrorKind::Functoriality;
        if (kind != ErrorKind::Syntax && kind != ErrorKind::Resolution && kind != ErrorKind::Functoriality) kind = ErrorKind::Shape;
        fail_at(kind, at, what + ": " + msg);
    }
}

template <Ring R>
Matrix<R> to_matrix(const R& ring, const IntMatrix& m) {
    return Matrix<R>::from_integers(ring, m);
}

// `[]` stands for any matrix with no rows or no columns.
template <Ring R>
Matrix<R> shaped(const R& ring, const IntMatrix& m, std::size_t rows, std::size_t cols, const Position& at, const std::string& what) {
    if (m.empty() && (rows == 0 || cols == 0)) return Matrix<R>(ring, rows, cols);
    const std::size_t r = m.size(), c = m.empty() ? 0 : m.front().size();
    if (r != rows || c != cols)
        fail_at(ErrorKind::Shape, at, what + " has shape " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                                          std::to_string(rows) + "x" + std::to_string(cols));
    return to_matrix(ring, m);
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& kind, const Position& at) {
    auto it = m.find(name);
    if (it == m.end()) fail_at(ErrorKind::Resolution, at, "undefined " + kind + " '" + name + "'");
    return it->second;
}

inline FiniteCategory build_category(const CategoryDecl& d) {
    if (d.builtin == "point") return categories::discrete({"*"});
    if (d.builtin == "span") return categories::span();
    if (d.builtin == "cospan") return categories::cospan();
    if (d.builtin == "cyclic") return categories::cyclic_group(d.parameter);
    if (d.builtin == "linear") {
        if (d.parameter < 0) fail(ErrorKind::Shape, "linear order needs n >= 0");
        return categories::linear_order(d.parameter);
    }
    std::vector<MorphismSpec> ms;
    std::map<std::string, std::string> ids;
    for (const auto& o : d.objects) {
        ms.push_back({"id_" + o, o, o});
        ids[o] = "id_" + o;
    }
    for (const auto& m : d.morphisms) ms.push_back({m.name, m.source, m.target});
    std::vector<CompositeSpec> comps;
    for (const auto& c : d.composites) comps.push_back({c.g, c.f, c.result});
    return FiniteCategory(d.objects, ms, ids, comps);
}

inline FiniteSimplicialSet build_simplicial_set(const SimplicialSetDecl& d) {
    if (d.kind == "point") return simplex(0);
    if (d.kind == "circle") return circle();
    if (d.kind == "simplex") return simplex(d.parameters.at(0));
    if (d.kind == "boundary") return boundary(d.parameters.at(0));
    return horn(d.parameters.at(0), d.parameters.at(1));
}

} // namespace detail

/// Resolves names and checks every shape, chain-map condition and
/// functoriality law before anything is computed.
template <Ring R>
Environment<R> elaborate(const Manifest& m, const R& ring) {
    Environment<R> env{ring, {}, {}, {}, {}, {}, {}, {}};
    std::map<std::string, Position> declared;
    auto declare = [&](const std::string& name, const Position& at) {
        auto [it, fresh] = declared.emplace(name, at);
        if (!fresh) fail_at(ErrorKind::Resolution, at, "name '" + name + "' is already declared at " + it->second.to_string());
    };

    for (const auto& d : m.matrices) {
        declare(d.name, d.at);
        env.matrices.emplace(d.name, detail::to_matrix(ring, d.entries));
    }
    for (const auto& d : m.complexes) {
        declare(d.name, d.at);
        std::map<int, Matrix<R>> diffs;
        for (const auto& [n, e] : d.differentials) {
            const auto rank = [&](int k) { return d.ranks.count(k) ? d.ranks.at(k) : std::size_t{0}; };
            diffs[n] = detail::shaped(ring, e, rank(n - 1), rank(n), d.differential_at.at(n), "complex " + d.name + ": d " + std::to_string(n));
        }
        env.complexes.emplace(d.name, detail::located(d.at, "complex " + d.name, [&] { return ChainComplex<R>(ring, d.ranks, diffs); }));
    }
    for (const auto& d : m.maps) {
        declare(d.name, d.at);
        const auto& s = detail::lookup(env.complexes, d.source, "complex", d.at);
        const auto& t = detail::lookup(env.complexes, d.target, "complex", d.at);
        std::map<int, Matrix<R>> comps;
        for (const auto& [n, e] : d.components)
            comps[n] = detail::shaped(ring, e, t.rank(n), s.rank(n), d.component_at.at(n), "map " + d.name + ": component " + std::to_string(n));
        env.maps.emplace(d.name, detail::located(d.at, "map " + d.name, [&] { return ChainMap<R>(s, t, comps); }));
    }
    for (const auto& d : m.categories) {
        declare(d.name, d.at);
        env.categories.emplace(d.name, detail::located(d.at, "category " + d.name, [&] { return detail::build_category(d); }));
    }
    for (const auto& d : m.simplicial_sets) {
        declare(d.name, d.at);
        env.simplicial_sets.emplace(d.name, detail::located(d.at, "sset " + d.name, [&] { return detail::build_simplicial_set(d); }));
    }
    for (const auto& d : m.diagrams) {
        declare(d.name, d.at);
        const auto& c = detail::lookup(env.categories, d.category, "category", d.at);
        if (d.constant) {
            const auto& value = detail::lookup(env.complexes, *d.constant, "complex", d.at);
            env.diagrams.emplace(d.name, constant_diagram(c, value));
            continue;
        }
        std::map<std::string, std::pair<std::string, Position>> given;
        for (std::size_t i = 0; i < d.assignments.size(); ++i) {
            const auto& [key, value] = d.assignments[i];
            if (!given.emplace(key, std::pair{value, d.assignment_at[i]}).second)
                fail_at(ErrorKind::Resolution, d.assignment_at[i], "diagram " + d.name + " assigns '" + key + "' twice");
        }
        Diagram<R> f{c, {}, {}};
        std::set<std::string> known;
        for (std::size_t o = 0; o < c.object_count(); ++o) {
            const auto& name = c.object_name(o);
            known.insert(name);
            auto it = given.find(name);
            if (it == given.end()) fail_at(ErrorKind::Resolution, d.at, "diagram " + d.name + " has no value for object '" + name + "'");
            const auto& [value, at] = it->second;
            f.objects.push_back(value == "zero" ? ChainComplex<R>::zero(ring) : detail::lookup(env.complexes, value, "complex", at));
        }
        for (std::size_t mo = 0; mo < c.morphism_count(); ++mo) {
            const auto& name = c.morphism_name(mo);
            known.insert(name);
            const auto& s = f.at(c.source(mo));
            const auto& t = f.at(c.target(mo));
            auto it = given.find(name);
            if (it == given.end()) {
                if (!c.is_identity(mo)) fail_at(ErrorKind::Resolution, d.at, "diagram " + d.name + " has no value for morphism '" + name + "'");
                f.morphisms.push_back(ChainMap<R>::identity(s));
                continue;
            }
            const auto& [value, at] = it->second;
            if (value == "zero") {
                f.morphisms.push_back(ChainMap<R>::zero(s, t));
            } else if (value == "id") {
                if (!(s == t)) fail_at(ErrorKind::Shape, at, "diagram " + d.name + ": '" + name + "' = id between different complexes");
                f.morphisms.push_back(ChainMap<R>::identity(s));
            } else {
                const auto& g = detail::lookup(env.maps, value, "map", at);
                if (!(g.source() == s) || !(g.target() == t))
                    fail_at(ErrorKind::Shape, at, "diagram " + d.name + ": map " + value + " does not go from F(" + c.object_name(c.source(mo)) +
                                                      ") to F(" + c.object_name(c.target(mo)) + ")");
                f.morphisms.push_back(g);
            }
        }
        for (const auto& [key, v] : given)
            if (!known.count(key)) fail_at(ErrorKind::Resolution, v.second, "category " + d.category + " has no object or morphism '" + key + "'");
        const auto violations = validate(f);
        if (!violations.empty()) {
            std::string msg;
            for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
            fail_at(ErrorKind::Functoriality, d.at, "diagram " + d.name + ": " + msg);
        }
        env.diagrams.emplace(d.name, std::move(f));
    }
    for (const auto& d : m.simplicial) {
        declare(d.name, d.at);
        auto build = [&]() -> SimplicialChainComplex<R> {
            if (d.kind == "linearize")
                return linearize(detail::lookup(env.simplicial_sets, d.arguments[0], "sset", d.at),
                                 detail::lookup(env.complexes, d.arguments[1], "complex", d.at), d.level);
            if (d.kind == "bar") return bar_simplicial(detail::lookup(env.diagrams, d.arguments[0], "diagram", d.at), d.level);
            return constant_simplicial(detail::lookup(env.complexes, d.arguments[0], "complex", d.at), d.level);
        };
        env.simplicial.emplace(d.name, detail::located(d.at, "simplicial " + d.name, build));
    }
    for (const auto& c : m.commands) {
        if (c.arguments.empty() || c.verb == "verify-props") continue;
        const auto& name = c.arguments[0];
        if (c.verb == "homology") detail::lookup(env.complexes, name, "complex", c.at);
        if (c.verb == "hocolim" || c.verb == "holim" || c.verb == "bar") detail::lookup(env.diagrams, name, "diagram", c.at);
        if (c.verb == "realize") detail::lookup(env.simplicial, name, "simplicial object", c.at);
        if (c.verb == "snf") detail::lookup(env.matrices, name, "matrix", c.at);
        if (c.arguments.size() == 3 && std::stoi(c.arguments[1]) > std::stoi(c.arguments[2]))
            fail_at(ErrorKind::Shape, c.at, "window [" + c.arguments[1] + "," + c.arguments[2] + "] is empty");
        if (c.verb == "bar" && std::stoi(c.arguments[1]) < 0) fail_at(ErrorKind::Shape, c.at, "bar level must be nonnegative");
    }
    return env;
}

} // namespace hocolim::dsl
