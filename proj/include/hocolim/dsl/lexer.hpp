#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "hocolim/error.hpp"

namespace hocolim::dsl {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;

    std::string to_string() const { return "line " + std::to_string(line) + ", column " + std::to_string(column); }
};

enum class TokenKind { Word, Integer, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    Position at;

    std::string describe() const {
        switch (kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::Integer: return "integer '" + text + "'";
        case TokenKind::Word: return "'" + text + "'";
        case TokenKind::Punct: return "'" + text + "'";
        }
        return text;
    }
};

[[noreturn]] inline void fail_at(ErrorKind kind, const Position& at, const std::string& message) {
    fail(kind, at.to_string() + ": " + message);
}

namespace detail {

inline bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '<' || c == '*' || c == '\'';
}

inline bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace detail

/// Splits DSL text into words, integers and punctuation. `#` starts a
/// comment running to the end of the line. A word is a run of letters,
/// digits, `_`, `<`, `*` and `'`, plus inner hyphens followed by a letter
/// (`verify-props`); a run of digits with an optional leading `-` is an
/// integer.
inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    Position at;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++at.line;
                at.column = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++at.column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        const Position start = at;
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({TokenKind::Punct, "->", start});
            advance(2);
            continue;
        }
        if (std::string("{}[],:;=").find(c) != std::string::npos) {
            out.push_back({TokenKind::Punct, std::string(1, c), start});
            advance(1);
            continue;
        }
        const bool negative = c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
        if (negative || detail::word_char(c)) {
            std::size_t j = i + (negative ? 1 : 0);
            while (j < text.size()) {
                if (detail::word_char(text[j])) {
                    ++j;
                } else if (!negative && text[j] == '-' && j + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[j + 1]))) {
                    ++j;
                } else {
                    break;
                }
            }
            std::string word = text.substr(i, j - i);
            const bool integer = detail::all_digits(word, negative ? 1 : 0);
            if (negative && !integer) fail_at(ErrorKind::Syntax, start, "malformed integer '" + word + "'");
            out.push_back({integer ? TokenKind::Integer : TokenKind::Word, word, start});
            advance(j - i);
            continue;
        }
        fail_at(ErrorKind::Syntax, start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::End, "", at});
    return out;
}

} // namespace hocolim::dsl
