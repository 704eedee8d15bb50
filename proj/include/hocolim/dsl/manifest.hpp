#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hocolim/dsl/lexer.hpp"
#include "hocolim/ring.hpp"

// Parsed, unresolved DSL input. Equality ignores source positions so that
// parse -> serialize -> parse can be compared directly.

namespace hocolim::dsl {

using IntMatrix = std::vector<std::vector<Integer>>;

struct RingDecl {
    enum class Kind { Integers, Rationals, PrimeField };
    Kind kind = Kind::Integers;
    long long prime = 0;
    Position at;

    friend bool operator==(const RingDecl& a, const RingDecl& b) { return a.kind == b.kind && a.prime == b.prime; }
};

struct MatrixDecl {
    std::string name;
    IntMatrix entries;
    Position at;

    friend bool operator==(const MatrixDecl& a, const MatrixDecl& b) { return a.name == b.name && a.entries == b.entries; }
};

struct ComplexDecl {
    std::string name;
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> differentials;
    std::map<int, Position> differential_at;
    Position at;

    friend bool operator==(const ComplexDecl& a, const ComplexDecl& b) {
        return a.name == b.name && a.ranks == b.ranks && a.differentials == b.differentials;
    }
};

struct MapDecl {
    std::string name;
    std::string source;
    std::string target;
    std::map<int, IntMatrix> components;
    std::map<int, Position> component_at;
    Position at;

    friend bool operator==(const MapDecl& a, const MapDecl& b) {
        return a.name == b.name && a.source == b.source && a.target == b.target && a.components == b.components;
    }
};

struct MorphismDecl {
    std::string name;
    std::string source;
    std::string target;
    Position at;

    friend bool operator==(const MorphismDecl& a, const MorphismDecl& b) {
        return a.name == b.name && a.source == b.source && a.target == b.target;
    }
};

struct CompositeDecl {
    std::string g;
    std::string f;
    std::string result;
    Position at;

    friend bool operator==(const CompositeDecl& a, const CompositeDecl& b) { return a.g == b.g && a.f == b.f && a.result == b.result; }
};

/// Either a built-in shape (`point`, `span`, `cospan`, `cyclic n`,
/// `linear n`) or an explicit table. Explicit objects get identities named
/// id_<object>.
struct CategoryDecl {
    std::string name;
    std::string builtin;
    int parameter = 0;
    std::vector<std::string> objects;
    std::vector<MorphismDecl> morphisms;
    std::vector<CompositeDecl> composites;
    Position at;

    friend bool operator==(const CategoryDecl& a, const CategoryDecl& b) {
        return a.name == b.name && a.builtin == b.builtin && a.parameter == b.parameter && a.objects == b.objects &&
               a.morphisms == b.morphisms && a.composites == b.composites;
    }
};

/// Values are names of complexes or maps, or the words `zero` and `id`.
struct DiagramDecl {
    std::string name;
    std::string category;
    std::optional<std::string> constant;
    std::vector<std::pair<std::string, std::string>> assignments;
    std::vector<Position> assignment_at;
    Position at;

    friend bool operator==(const DiagramDecl& a, const DiagramDecl& b) {
        return a.name == b.name && a.category == b.category && a.constant == b.constant && a.assignments == b.assignments;
    }
};

/// `point`, `circle`, `simplex n`, `boundary n` or `horn n k`.
struct SimplicialSetDecl {
    std::string name;
    std::string kind;
    std::vector<int> parameters;
    Position at;

    friend bool operator==(const SimplicialSetDecl& a, const SimplicialSetDecl& b) {
        return a.name == b.name && a.kind == b.kind && a.parameters == b.parameters;
    }
};

/// `linearize K C`, `bar F` or `constant C`, through `level`.
struct SimplicialDecl {
    std::string name;
    std::string kind;
    std::vector<std::string> arguments;
    int level = 0;
    Position at;

    friend bool operator==(const SimplicialDecl& a, const SimplicialDecl& b) {
        return a.name == b.name && a.kind == b.kind && a.arguments == b.arguments && a.level == b.level;
    }
};

/// A command word with its arguments as written.
struct CommandDecl {
    std::string verb;
    std::vector<std::string> arguments;
    Position at;

    std::string echo() const {
        std::string out = verb;
        for (const auto& a : arguments) out += " " + a;
        return out;
    }

    friend bool operator==(const CommandDecl& a, const CommandDecl& b) { return a.verb == b.verb && a.arguments == b.arguments; }
};

struct Manifest {
    RingDecl ring;
    std::vector<MatrixDecl> matrices;
    std::vector<ComplexDecl> complexes;
    std::vector<MapDecl> maps;
    std::vector<CategoryDecl> categories;
    std::vector<DiagramDecl> diagrams;
    std::vector<SimplicialSetDecl> simplicial_sets;
    std::vector<SimplicialDecl> simplicial;
    std::vector<CommandDecl> commands;

    friend bool operator==(const Manifest&, const Manifest&) = default;
};

namespace detail {

inline std::string write_matrix(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].str();
        out += "]";
    }
    return out + "]";
}

} // namespace detail

/// Canonical text: declarations grouped by kind in a fixed order, one item
/// per line inside blocks.
inline std::string serialize(const Manifest& m) {
    std::string out;
    switch (m.ring.kind) {
    case RingDecl::Kind::Integers: out += "ring Z\n"; break;
    case RingDecl::Kind::Rationals: out += "ring Q\n"; break;
    case RingDecl::Kind::PrimeField: out += "ring F " + std::to_string(m.ring.prime) + "\n"; break;
    }
    for (const auto& x : m.matrices) out += "matrix " + x.name + " = " + detail::write_matrix(x.entries) + "\n";
    for (const auto& c : m.complexes) {
        out += "complex " + c.name + " {\n";
        for (const auto& [n, r] : c.ranks) out += "  " + std::to_string(n) + ": rank " + std::to_string(r) + "\n";
        for (const auto& [n, d] : c.differentials) out += "  d " + std::to_string(n) + " = " + detail::write_matrix(d) + "\n";
        out += "}\n";
    }
    for (const auto& f : m.maps) {
        out += "map " + f.name + " : " + f.source + " -> " + f.target + " {\n";
        for (const auto& [n, c] : f.components) out += "  " + std::to_string(n) + " = " + detail::write_matrix(c) + "\n";
        out += "}\n";
    }
    for (const auto& c : m.categories) {
        if (!c.builtin.empty()) {
            out += "category " + c.name + " = " + c.builtin;
            if (c.builtin == "cyclic" || c.builtin == "linear") out += " " + std::to_string(c.parameter);
            out += "\n";
            continue;
        }
        out += "category " + c.name + " {\n  objects";
        for (const auto& o : c.objects) out += " " + o;
        out += ";\n";
        for (const auto& mor : c.morphisms) out += "  morphism " + mor.name + " : " + mor.source + " -> " + mor.target + ";\n";
        for (const auto& comp : c.composites) out += "  compose " + comp.g + " " + comp.f + " = " + comp.result + ";\n";
        out += "}\n";
    }
    for (const auto& k : m.simplicial_sets) {
        out += "sset " + k.name + " = " + k.kind;
        for (int p : k.parameters) out += " " + std::to_string(p);
        out += "\n";
    }
    for (const auto& d : m.diagrams) {
        out += "diagram " + d.name + " : " + d.category;
        if (d.constant) {
            out += " = constant " + *d.constant + "\n";
            continue;
        }
        out += " {\n";
        for (const auto& [k, v] : d.assignments) out += "  " + k + " = " + v + ";\n";
        out += "}\n";
    }
    for (const auto& x : m.simplicial) {
        out += "simplicial " + x.name + " = " + x.kind;
        for (const auto& a : x.arguments) out += " " + a;
        out += " level " + std::to_string(x.level) + "\n";
    }
    for (const auto& c : m.commands) out += "cmd " + c.echo() + "\n";
    return out;
}

} // namespace hocolim::dsl
