#pragma once

// Recursive-descent parser and canonical printer for polynomial expressions.
//
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := ["-"] base ["^" natural]
//   base     := variable | rational | "(" expr ")"
//   rational := natural ["/" natural]
//
// Variables are x, y, z for Poly3 and t1, t2 for Poly2. Juxtaposition ("2y")
// is a syntax error; "*" is always required.

#include "polynomial.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nagata {

template <std::size_t N>
struct VariableNames;

template <>
struct VariableNames<3> {
    static constexpr std::array<std::string_view, 3> names{"x", "y", "z"};
};

template <>
struct VariableNames<2> {
    static constexpr std::array<std::string_view, 2> names{"t1", "t2"};
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position, std::set<std::string> expected)
        : std::runtime_error(what), position_(position), expected_(std::move(expected)) {}

    /// 1-based character position of the offending input.
    std::size_t position() const { return position_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::set<std::string> expected_;
};

class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(const std::string& name, std::size_t position)
        : ParseError("unknown identifier '" + name + "' at position " + std::to_string(position), position, {}),
          name_(name) {}

    const std::string& identifier() const { return name_; }

private:
    std::string name_;
};

namespace detail {

template <std::size_t N>
class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    Polynomial<N> parse() {
        skip_space();
        auto p = expr();
        skip_space();
        if (pos_ < src_.size()) fail({"+", "-", "*", "^", "end of input"});
        return p;
    }

private:
    Polynomial<N> expr() {
        auto acc = term();
        for (;;) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial<N> term() {
        auto acc = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') return acc;
            ++pos_;
            acc *= factor();
        }
    }

    Polynomial<N> factor() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        auto b = base();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            auto n = natural();
            if (!n.fits_ulong_p()) fail_at(pos_, "exponent too large", {});
            b = pow(b, n.get_ui());
        }
        return negate ? -b : b;
    }

    Polynomial<N> base() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            skip_space();
            if (peek() != ')') fail({")", "+", "-", "*", "^"});
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = natural();
            Integer den = 1;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                const auto at = pos_;
                den = natural();
                if (den == 0) fail_at(at, "zero denominator", {});
            }
            return Polynomial<N>(make_rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const auto name = src_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < N; ++i)
                if (VariableNames<N>::names[i] == name) return Polynomial<N>::variable(i);
            throw UnknownIdentifierError(std::string(name), start + 1);
        }
        fail({"variable", "number", "(", "-"});
    }

    Integer natural() {
        const auto start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail({"natural number"});
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    // At end of input the error points at the last non-space character.
    [[noreturn]] void fail(std::set<std::string> expected) {
        std::size_t at = pos_ + 1;
        std::string found;
        if (pos_ >= src_.size()) {
            at = src_.find_last_not_of(" \t\r\n");
            at = at == std::string_view::npos ? 1 : at + 1;
            found = "end of input";
        } else {
            found = "'" + std::string(1, src_[pos_]) + "'";
        }
        std::string list;
        for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
        throw ParseError("syntax error at position " + std::to_string(at) + ": unexpected " + found +
                             ", expected one of {" + list + "}",
                         at, std::move(expected));
    }

    [[noreturn]] void fail_at(std::size_t index, const std::string& what, std::set<std::string> expected) {
        throw ParseError(what + " at position " + std::to_string(index + 1), index + 1, std::move(expected));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <std::size_t N>
Polynomial<N> parse_polynomial(std::string_view src) {
    return detail::ExprParser<N>(src).parse();
}

inline Poly3 parse_poly3(std::string_view src) { return parse_polynomial<3>(src); }
inline Poly2 parse_poly2(std::string_view src) { return parse_polynomial<2>(src); }

/// Canonical text: terms in term order, coefficients in lowest terms, unit
/// coefficients omitted. The output parses back to the same value.
template <std::size_t N>
std::string print_canonical(const Polynomial<N>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        c = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < N; ++i) {
            if (t.exponent[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += VariableNames<N>::names[i];
            if (t.exponent[i] > 1) mono += "^" + std::to_string(t.exponent[i]);
        }
        if (mono.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += to_string(c) + "*" + mono;
        }
    }
    return out;
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Polynomial<N>& p) {
    return os << print_canonical(p);
}

/// Text for a single monomial with unit coefficient, e.g. "t1^2*t2".
template <std::size_t N>
std::string print_monomial(const Exponent<N>& e) {
    return print_canonical(Polynomial<N>::monomial(e, 1));
}

}  // namespace nagata
