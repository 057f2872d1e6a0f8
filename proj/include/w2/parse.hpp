#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "w2/errors.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"
#include "w2/rational.hpp"
#include "w2/univariate.hpp"

namespace w2 {

namespace detail {

/**
 * Recursive-descent parser for the expression grammar
 *
 *     expr   := term { ("+" | "-") term }
 *     term   := factor { "*" factor }
 *     factor := base [ "^" nat ] | "-" factor
 *     base   := rat | "x" | "y" | "(" expr ")"
 *     rat    := int [ "/" int ]
 *
 * Multiplication is always explicit ("2x" is rejected), "/" exists only
 * between integer literals, and unary minus binds looser than "^" so that
 * -x^2 reads as -(x^2).
 */
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            if (text_[pos_] == '/')
                fail("'/' between subexpressions is not part of the grammar"
                     " (rational functions take separate numerator and denominator)");
            fail("unexpected trailing input");
        }
        return p;
    }

private:
    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_space();
            if (accept('*')) {
                p *= factor();
            } else {
                // Explicit multiplication only: a base followed directly by
                // another base is a syntax error, reported right here.
                std::size_t save = pos_;
                skip_space();
                if (pos_ < text_.size()) {
                    char c = text_[pos_];
                    if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
                        fail("missing operator (multiplication must be written with '*')");
                }
                pos_ = save;
                return p;
            }
        }
    }

    Polynomial factor() {
        skip_space();
        if (accept('-')) return -factor();
        Polynomial b = base();
        skip_space();
        if (accept('^')) {
            skip_space();
            unsigned long e = natural();
            if (e > 64) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return Polynomial::x();
        }
        if (c == 'y') {
            ++pos_;
            return Polynomial::y();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            skip_space();
            if (accept('/')) {
                skip_space();
                std::size_t den_pos = pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("'/' is only allowed between integer literals");
                Int den = integer();
                if (den == 0) throw parse_error("zero denominator in coefficient", den_pos);
                return Polynomial(make_rat(num, den));
            }
            return Polynomial(Rat(num));
        }
        if (c == '/') fail("'/' is only allowed between integer literals");
        fail("expected a number, variable, or '('");
    }

    Int integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned long natural() {
        std::size_t start = pos_;
        Int v = integer();
        if (!v.fits_ulong_p()) throw parse_error("exponent too large", start);
        return v.get_ui();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::string monomial_to_string(const Monomial& m, const Rat& coeff, bool leading) {
    std::string out;
    Rat a = abs(coeff);
    if (!leading) out += sign(coeff) < 0 ? " - " : " + ";
    else if (sign(coeff) < 0) out += "-";
    bool coeff_printed = false;
    if (a != 1 || m.total() == 0) {
        out += rat_to_string(a);
        coeff_printed = true;
    }
    auto var_part = [&](const char* name, unsigned deg) {
        if (deg == 0) return;
        if (coeff_printed) out += "*";
        out += name;
        if (deg > 1) {
            out += "^";
            out += std::to_string(deg);
        }
        coeff_printed = true;
    };
    var_part("x", m.xdeg);
    var_part("y", m.ydeg);
    return out;
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
    return detail::ExprParser(text).run();
}

// Fraction from two grammar strings, in canonical reduced form.
inline RationalFunction parse_rational(std::string_view num_text, std::string_view den_text) {
    Polynomial num = parse_polynomial(num_text);
    Polynomial den = parse_polynomial(den_text);
    if (den.is_zero()) throw domain_error("zero denominator");
    return {num, den};
}

// Canonical text form: terms in graded-lex order (x before y, higher total
// degree first), explicit '*' and '^', rational coefficients as n or n/d.
// Parsing the output reproduces the polynomial exactly.
inline std::string format(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : p.terms()) {
        out += detail::monomial_to_string(m, c, leading);
        leading = false;
    }
    return out;
}

inline std::string format(const RationalFunction& u) {
    if (u.is_polynomial()) return format(u.num());
    return "(" + format(u.num()) + ") / (" + format(u.den()) + ")";
}

// Same conventions with the single variable printed as var.
inline std::string format(const UnivariatePolynomial& p, const char* var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(static_cast<unsigned>(k));
        if (c == 0) continue;
        Rat a = abs(c);
        if (!leading) out += sign(c) < 0 ? " - " : " + ";
        else if (sign(c) < 0) out += "-";
        bool coeff_printed = false;
        if (a != 1 || k == 0) {
            out += rat_to_string(a);
            coeff_printed = true;
        }
        if (k > 0) {
            if (coeff_printed) out += "*";
            out += var;
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
        leading = false;
    }
    return out;
}

}  // namespace w2
