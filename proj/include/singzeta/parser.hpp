#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "singzeta/polynomial.hpp"

namespace singzeta {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " +
                             std::to_string(c)),
          line(l),
          column(c) {}
};

namespace detail {

// Recursive-descent parser for polynomial expressions:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | factor)*      (juxtaposition multiplies)
//   factor := atom ('^' nat)*
//   atom   := nat ['/' nat] | variable | '(' expr ')'
class ExprParser {
public:
    ExprParser(const std::string& text, const std::map<std::string, int>& vars, int nvars)
        : text_(text), vars_(vars), nvars_(nvars) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '-') {
            neg = true;
            advance();
        } else if (peek() == '+') {
            advance();
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                advance();
                p += term();
            } else if (c == '-') {
                advance();
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                advance();
                p = p * factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        Polynomial p = atom();
        while (true) {
            skip_ws();
            if (peek() != '^') return p;
            advance();
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            long long e = natural("exponent expected");
            Polynomial r = Polynomial::constant(nvars_, 1);
            for (long long i = 0; i < e; ++i) r = r * p;
            p = r;
        }
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = bignat("number expected");
            skip_ws();
            if (peek() == '/') {
                advance();
                skip_ws();
                Int den = bignat("denominator expected");
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(nvars_, Rational(num, den));
            }
            return Polynomial::constant(nvars_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            int l = line_, col = col_;
            while (std::isalnum(static_cast<unsigned char>(peek()))) {
                name += peek();
                advance();
            }
            auto it = vars_.find(name);
            if (it == vars_.end())
                throw ParseError("unknown identifier '" + name + "'", l, col);
            return Polynomial::variable(nvars_, it->second);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
        return Polynomial(nvars_);  // unreachable
    }

    long long natural(const char* msg) {
        Int v = bignat(msg);
        if (v > 1000) fail("exponent too large");
        return static_cast<long long>(v);
    }

    Int bignat(const char* msg) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(msg);
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            advance();
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() {
        if (pos_ >= text_.size()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    const std::string& text_;
    const std::map<std::string, int>& vars_;
    int nvars_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

}  // namespace detail

inline const std::map<std::string, int>& variables3() {
    static const std::map<std::string, int> v = {{"z1", 0}, {"z2", 1}, {"z3", 2}, {"x", 0},
                                                 {"y", 1},  {"z", 2},  {"v1", 0}, {"v2", 1},
                                                 {"v3", 2}, {"u1", 0}, {"u2", 1}, {"u3", 2}};
    return v;
}

// 2-variable table used for h and for local normal forms: the curve-side
// coordinates z2, z3 (a.k.a. v2, v3).
inline const std::map<std::string, int>& variables2() {
    static const std::map<std::string, int> v = {{"z2", 0}, {"z3", 1}, {"v2", 0}, {"v3", 1},
                                                 {"x", 0},  {"y", 1},  {"u", 0},  {"v", 1}};
    return v;
}

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::map<std::string, int>& vars, int nvars) {
    return detail::ExprParser(text, vars, nvars).parse();
}

inline Polynomial parse3(const std::string& text) {
    return parse_polynomial(text, variables3(), 3);
}

inline Polynomial parse2(const std::string& text) {
    return parse_polynomial(text, variables2(), 2);
}

}  // namespace singzeta
