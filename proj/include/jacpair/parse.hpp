#pragma once

#include "jacpair/poly.hpp"

#include <cctype>
#include <string>

namespace jacpair {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct ParseOptions {
    int max_exponent = 64;  // per-variable cap, checked on literals and on the expanded result
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, ParseOptions opt) : s_(text), opt_(opt) {}

    Poly2 run() {
        Poly2 p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        for (const auto& [m, c] : p.terms())
            if (m.i > opt_.max_exponent || m.j > opt_.max_exponent)
                throw ParseError("exponent exceeds cap " + std::to_string(opt_.max_exponent), 0);
        return p;
    }

private:
    const std::string& s_;
    ParseOptions opt_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly2 parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly2 p = parse_term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (accept('+')) {
                p += parse_term();
            } else if (accept('-')) {
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    // term := coeff ['*' factors] | factors | coeff
    Poly2 parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected term");
        Poly2 acc = Poly2::constant(1);
        bool have_atom = false;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            acc = Poly2::constant(parse_coeff());
            have_atom = true;
            skip_ws();
            if (!accept('*')) return acc;
        }
        // product of variable factors and parenthesised groups
        bool expect_factor = true;
        bool seen_x = false, seen_y = false;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) {
                if (expect_factor) fail("expected factor");
                break;
            }
            char ch = s_[pos_];
            if (ch == 'x' || ch == 'y') {
                if (ch == 'x' && seen_x) fail("duplicate variable in monomial");
                if (ch == 'y' && seen_y) fail("duplicate variable in monomial");
                (ch == 'x' ? seen_x : seen_y) = true;
                ++pos_;
                int e = parse_opt_exponent();
                acc *= Poly2::term(1, ch == 'x' ? e : 0, ch == 'x' ? 0 : e);
                have_atom = true;
            } else if (ch == '(') {
                ++pos_;
                Poly2 inner = parse_expr();
                skip_ws();
                if (!accept(')')) fail("expected ')'");
                int e = parse_opt_exponent();
                acc *= inner.pow(static_cast<unsigned>(e));
                have_atom = true;
                seen_x = seen_y = false;  // a group breaks the monomial run
            } else if (expect_factor) {
                fail("expected factor");
            } else {
                break;
            }
            expect_factor = false;
            skip_ws();
            if (!accept('*')) break;
            expect_factor = true;
        }
        if (!have_atom) fail("expected term");
        return acc;
    }

    int parse_opt_exponent() {
        if (!accept('^')) return 1;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
        long long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > opt_.max_exponent)
                throw ParseError("exponent exceeds cap " + std::to_string(opt_.max_exponent), at);
            ++pos_;
        }
        return static_cast<int>(e);
    }

    Rational parse_coeff() {
        Int num = parse_int();
        skip_ws();
        std::size_t save = pos_;
        if (accept('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Int den = parse_int();
                if (den == 0) fail("zero denominator");
                return Rational(num, den);
            }
            pos_ = save;  // not a fraction after all
        }
        return Rational(num);
    }

    Int parse_int() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return Int(digits);
    }
};

}  // namespace detail

/// Parses the polynomial grammar (terms of rationals times x/y powers, '+'/'-',
/// whitespace ignored) plus parenthesised subexpressions with integer powers.
inline Poly2 parse_poly(const std::string& text, ParseOptions opt = {}) {
    return detail::PolyParser(text, opt).run();
}

}  // namespace jacpair
