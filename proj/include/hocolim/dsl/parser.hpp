#pragma once

#include <set>
#include <string>
#include <vector>

#include "hocolim/dsl/manifest.hpp"

namespace hocolim::dsl {

/// Recursive-descent parser for the manifest grammar:
///
///   manifest   := statement*
///   statement  := 'ring' ('Z' | 'Q' | 'F' INT)
///               | 'matrix' NAME '=' matrix
///               | 'complex' NAME '{' (INT ':' 'rank' INT | 'd' INT '=' matrix)* '}'
///               | 'map' NAME ':' NAME '->' NAME '{' (INT '=' matrix)* '}'
///               | 'category' NAME '=' ('point' | 'span' | 'cospan' | 'cyclic' INT | 'linear' INT)
///               | 'category' NAME '{' ('objects' NAME+ ';' | 'morphism' NAME ':' NAME '->' NAME ';'
///                                      | 'compose' NAME NAME '=' NAME ';')* '}'
///               | 'diagram' NAME ':' NAME ('=' 'constant' NAME | '{' (NAME '=' NAME ';')* '}')
///               | 'sset' NAME '=' ('point' | 'circle' | 'simplex' INT | 'boundary' INT | 'horn' INT INT)
///               | 'simplicial' NAME '=' ('linearize' NAME NAME | 'bar' NAME | 'constant' NAME) 'level' INT
///               | 'cmd' command
///   command    := ('homology' | 'hocolim' | 'holim' | 'realize') NAME INT INT
///               | 'bar' NAME INT | 'snf' NAME | 'verify-props' ('seed' INT | 'trials' INT)*
///   matrix     := '[' (row (',' row)*)? ']'      row := '[' (INT (',' INT)*)? ']'
///
/// NAME is a word or a nonnegative integer. Only syntax is checked here;
/// names and shapes are resolved by `elaborate`.
class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    Manifest parse() {
        Manifest m;
        bool have_ring = false;
        while (peek().kind != TokenKind::End) {
            const Token& t = peek();
            if (t.kind != TokenKind::Word) unexpected("a statement keyword");
            if (t.text == "ring") {
                if (have_ring) fail_at(ErrorKind::Syntax, t.at, "second ring declaration");
                m.ring = ring();
                have_ring = true;
            } else if (t.text == "matrix") {
                m.matrices.push_back(matrix_decl());
            } else if (t.text == "complex") {
                m.complexes.push_back(complex());
            } else if (t.text == "map") {
                m.maps.push_back(map());
            } else if (t.text == "category") {
                m.categories.push_back(category());
            } else if (t.text == "diagram") {
                m.diagrams.push_back(diagram());
            } else if (t.text == "sset") {
                m.simplicial_sets.push_back(sset());
            } else if (t.text == "simplicial") {
                m.simplicial.push_back(simplicial());
            } else if (t.text == "cmd") {
                m.commands.push_back(command());
            } else {
                unexpected("a statement keyword (ring, matrix, complex, map, category, diagram, sset, simplicial, cmd)");
            }
        }
        return m;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void unexpected(const std::string& expectation) const {
        fail_at(ErrorKind::Syntax, peek().at, "expected " + expectation + ", found " + peek().describe());
    }

    bool at_punct(const std::string& p) const { return peek().kind == TokenKind::Punct && peek().text == p; }
    bool at_word(const std::string& w) const { return peek().kind == TokenKind::Word && peek().text == w; }

    void punct(const std::string& p) {
        if (!at_punct(p)) unexpected("'" + p + "'");
        next();
    }
    void keyword(const std::string& w) {
        if (!at_word(w)) unexpected("'" + w + "'");
        next();
    }
    std::string name() {
        if (peek().kind == TokenKind::Word) return next().text;
        if (peek().kind == TokenKind::Integer && peek().text[0] != '-') return next().text;
        unexpected("a name");
    }
    Integer big_integer() {
        if (peek().kind != TokenKind::Integer) unexpected("an integer");
        return Integer(next().text);
    }
    int small_integer() {
        const Token t = peek();
        const Integer v = big_integer();
        if (v > 1000000 || v < -1000000) fail_at(ErrorKind::Syntax, t.at, "integer " + t.text + " is out of range here");
        return static_cast<int>(v);
    }
    std::size_t count() {
        const Token t = peek();
        const int v = small_integer();
        if (v < 0) fail_at(ErrorKind::Syntax, t.at, "expected a nonnegative integer, found " + t.text);
        return static_cast<std::size_t>(v);
    }

    IntMatrix matrix() {
        const Position at = peek().at;
        IntMatrix m;
        punct("[");
        while (!at_punct("]")) {
            if (!m.empty()) punct(",");
            std::vector<Integer> row;
            punct("[");
            while (!at_punct("]")) {
                if (!row.empty()) punct(",");
                row.push_back(big_integer());
            }
            punct("]");
            m.push_back(std::move(row));
        }
        punct("]");
        for (const auto& row : m)
            if (row.size() != m.front().size()) fail_at(ErrorKind::Shape, at, "matrix rows have different lengths");
        return m;
    }

    RingDecl ring() {
        RingDecl r;
        r.at = next().at;
        const Token t = peek();
        const std::string w = name();
        if (w == "Z") {
            r.kind = RingDecl::Kind::Integers;
        } else if (w == "Q") {
            r.kind = RingDecl::Kind::Rationals;
        } else if (w == "F") {
            r.kind = RingDecl::Kind::PrimeField;
            const Token p = peek();
            const Integer v = big_integer();
            if (v < 2 || v >= (Integer(1) << 31)) fail_at(ErrorKind::Syntax, p.at, "prime " + p.text + " is out of range");
            r.prime = static_cast<long long>(v);
        } else {
            fail_at(ErrorKind::Syntax, t.at, "expected Z, Q or F <prime>, found " + t.describe());
        }
        return r;
    }

    MatrixDecl matrix_decl() {
        MatrixDecl d;
        d.at = next().at;
        d.name = name();
        punct("=");
        d.entries = matrix();
        return d;
    }

    ComplexDecl complex() {
        ComplexDecl c;
        c.at = next().at;
        c.name = name();
        punct("{");
        while (!at_punct("}")) {
            if (at_word("d")) {
                next();
                const Token t = peek();
                const int n = small_integer();
                punct("=");
                if (c.differentials.count(n)) fail_at(ErrorKind::Syntax, t.at, "differential d " + t.text + " given twice");
                c.differential_at[n] = t.at;
                c.differentials[n] = matrix();
            } else if (peek().kind == TokenKind::Integer) {
                const Token t = peek();
                const int n = small_integer();
                punct(":");
                keyword("rank");
                if (c.ranks.count(n)) fail_at(ErrorKind::Syntax, t.at, "rank of degree " + t.text + " given twice");
                c.ranks[n] = count();
            } else {
                unexpected("'<degree>: rank <r>', 'd <degree> = <matrix>' or '}'");
            }
        }
        punct("}");
        return c;
    }

    MapDecl map() {
        MapDecl f;
        f.at = next().at;
        f.name = name();
        punct(":");
        f.source = name();
        punct("->");
        f.target = name();
        punct("{");
        while (!at_punct("}")) {
            const Token t = peek();
            const int n = small_integer();
            punct("=");
            if (f.components.count(n)) fail_at(ErrorKind::Syntax, t.at, "component in degree " + t.text + " given twice");
            f.component_at[n] = t.at;
            f.components[n] = matrix();
        }
        punct("}");
        return f;
    }

    CategoryDecl category() {
        CategoryDecl c;
        c.at = next().at;
        c.name = name();
        if (at_punct("=")) {
            next();
            const Token t = peek();
            c.builtin = name();
            if (c.builtin == "cyclic" || c.builtin == "linear") {
                c.parameter = small_integer();
            } else if (c.builtin != "point" && c.builtin != "span" && c.builtin != "cospan") {
                fail_at(ErrorKind::Syntax, t.at, "expected point, span, cospan, cyclic <n> or linear <n>, found " + t.describe());
            }
            return c;
        }
        punct("{");
        while (!at_punct("}")) {
            if (at_word("objects")) {
                next();
                do c.objects.push_back(name());
                while (!at_punct(";"));
                next();
            } else if (at_word("morphism")) {
                MorphismDecl m;
                m.at = next().at;
                m.name = name();
                punct(":");
                m.source = name();
                punct("->");
                m.target = name();
                punct(";");
                c.morphisms.push_back(m);
            } else if (at_word("compose")) {
                CompositeDecl k;
                k.at = next().at;
                k.g = name();
                k.f = name();
                punct("=");
                k.result = name();
                punct(";");
                c.composites.push_back(k);
            } else {
                unexpected("'objects', 'morphism', 'compose' or '}'");
            }
        }
        punct("}");
        return c;
    }

    DiagramDecl diagram() {
        DiagramDecl d;
        d.at = next().at;
        d.name = name();
        punct(":");
        d.category = name();
        if (at_punct("=")) {
            next();
            keyword("constant");
            d.constant = name();
            return d;
        }
        punct("{");
        while (!at_punct("}")) {
            const Position at = peek().at;
            std::string key = name();
            punct("=");
            std::string value = name();
            punct(";");
            d.assignments.emplace_back(std::move(key), std::move(value));
            d.assignment_at.push_back(at);
        }
        punct("}");
        return d;
    }

    SimplicialSetDecl sset() {
        SimplicialSetDecl k;
        k.at = next().at;
        k.name = name();
        punct("=");
        const Token t = peek();
        k.kind = name();
        std::size_t arity = 0;
        if (k.kind == "simplex" || k.kind == "boundary") {
            arity = 1;
        } else if (k.kind == "horn") {
            arity = 2;
        } else if (k.kind != "point" && k.kind != "circle") {
            fail_at(ErrorKind::Syntax, t.at, "expected point, circle, simplex <n>, boundary <n> or horn <n> <k>, found " + t.describe());
        }
        for (std::size_t i = 0; i < arity; ++i) k.parameters.push_back(small_integer());
        return k;
    }

    SimplicialDecl simplicial() {
        SimplicialDecl x;
        x.at = next().at;
        x.name = name();
        punct("=");
        const Token t = peek();
        x.kind = name();
        if (x.kind == "linearize") {
            x.arguments.push_back(name());
            x.arguments.push_back(name());
        } else if (x.kind == "bar" || x.kind == "constant") {
            x.arguments.push_back(name());
        } else {
            fail_at(ErrorKind::Syntax, t.at, "expected linearize, bar or constant, found " + t.describe());
        }
        keyword("level");
        const Token l = peek();
        x.level = small_integer();
        if (x.level < 0) fail_at(ErrorKind::Syntax, l.at, "level must be nonnegative");
        return x;
    }

    std::string integer_text() {
        return std::to_string(small_integer());
    }

    CommandDecl command() {
        CommandDecl c;
        next();
        c.at = peek().at;
        c.verb = name();
        if (c.verb == "homology" || c.verb == "hocolim" || c.verb == "holim" || c.verb == "realize") {
            c.arguments = {name(), integer_text(), integer_text()};
        } else if (c.verb == "bar") {
            c.arguments = {name(), integer_text()};
        } else if (c.verb == "snf") {
            c.arguments = {name()};
        } else if (c.verb == "verify-props") {
            std::set<std::string> seen;
            while (at_word("seed") || at_word("trials")) {
                const Token k = next();
                if (!seen.insert(k.text).second) fail_at(ErrorKind::Syntax, k.at, "option " + k.text + " given twice");
                c.arguments.push_back(k.text);
                const Token v = peek();
                const Integer value = big_integer();
                if (value < 0 || value >= (Integer(1) << 64)) fail_at(ErrorKind::Syntax, v.at, k.text + " " + v.text + " is out of range");
                c.arguments.push_back(value.str());
            }
        } else {
            fail_at(ErrorKind::Syntax, c.at, "unknown command " + c.verb + "; expected homology, hocolim, holim, realize, bar, snf or verify-props");
        }
        return c;
    }
};

inline Manifest parse(const std::string& text) { return Parser(text).parse(); }

} // namespace hocolim::dsl
