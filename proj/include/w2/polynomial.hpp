#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "w2/errors.hpp"
#include "w2/rational.hpp"

namespace w2 {

enum class Var { x, y };

constexpr Var other(Var v) { return v == Var::x ? Var::y : Var::x; }

constexpr const char* var_name(Var v) { return v == Var::x ? "x" : "y"; }

struct Monomial {
    unsigned xdeg = 0;
    unsigned ydeg = 0;

    unsigned total() const { return xdeg + ydeg; }
    unsigned deg(Var v) const { return v == Var::x ? xdeg : ydeg; }

    Monomial times(const Monomial& o) const { return {xdeg + o.xdeg, ydeg + o.ydeg}; }
    bool divisible_by(const Monomial& o) const { return xdeg >= o.xdeg && ydeg >= o.ydeg; }
    Monomial divided_by(const Monomial& o) const { return {xdeg - o.xdeg, ydeg - o.ydeg}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lexicographic order with x > y, largest monomial first.  Map
// iteration therefore visits terms in printing order and begin() is the
// leading term.
struct MonomialOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.xdeg > b.xdeg;
    }
};

// Element of Q[x, y] as a sparse term map; no zero coefficient is ever
// stored, so representations are canonical and operator== is exact equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrderDesc>;

    // Degree of the zero polynomial ("minus infinity"); all real degrees
    // are >= 0, so -1 compares correctly in every bound check.
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;

    explicit Polynomial(const Rat& constant) {
        if (constant != 0) terms_[Monomial{0, 0}] = constant;
    }

    explicit Polynomial(long constant) : Polynomial(Rat(constant)) {}

    static Polynomial monomial(unsigned xdeg, unsigned ydeg, const Rat& coeff = Rat(1)) {
        Polynomial p;
        if (coeff != 0) p.terms_[Monomial{xdeg, ydeg}] = coeff;
        return p;
    }

    static Polynomial variable(Var v) {
        return v == Var::x ? monomial(1, 0) : monomial(0, 1);
    }

    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }
    static Polynomial one() { return Polynomial(Rat(1)); }
    static Polynomial zero() { return Polynomial(); }

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }

    // Constant value; only meaningful for constant polynomials.
    Rat constant_value() const {
        if (is_zero()) return Rat(0);
        detail::check(is_constant(), "constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    int degree() const {
        if (terms_.empty()) return kZeroDegree;
        return static_cast<int>(terms_.begin()->first.total());
    }

    int degree_in(Var v) const {
        int d = kZeroDegree;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg(v)));
        return d;
    }

    Monomial leading_monomial() const {
        detail::check(!terms_.empty(), "leading monomial of zero polynomial");
        return terms_.begin()->first;
    }

    Rat leading_coeff() const {
        detail::check(!terms_.empty(), "leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    Rat coeff(unsigned xdeg, unsigned ydeg) const {
        auto it = terms_.find(Monomial{xdeg, ydeg});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Coefficient of v^k: a polynomial in the other variable.
    Polynomial coeff_in(Var v, unsigned k) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            if (m.deg(v) == k) {
                Monomial rest = m;
                (v == Var::x ? rest.xdeg : rest.ydeg) = 0;
                out.terms_[rest] = c;
            }
        }
        return out;
    }

    bool has_only(Var v) const { return degree_in(other(v)) <= 0; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const Rat& s) {
        Polynomial out;
        if (s == 0) return out;
        out.terms_ = a.terms_;
        for (auto& [m, c] : out.terms_) c *= s;
        return out;
    }

    friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a * s; }

    Polynomial pow(unsigned k) const {
        Polynomial out = one();
        for (unsigned i = 0; i < k; ++i) out *= *this;
        return out;
    }

    Polynomial derivative(Var v) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            unsigned e = m.deg(v);
            if (e == 0) continue;
            Monomial dm = m;
            (v == Var::x ? dm.xdeg : dm.ydeg) = e - 1;
            out.add_term(dm, c * Rat(static_cast<long>(e)));
        }
        return out;
    }

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; 0 for the zero polynomial.
    Rat rational_content() const {
        if (is_zero()) return Rat(0);
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        return make_rat(abs(num_gcd), den_lcm);
    }

    // Integer-primitive associate with positive leading coefficient.
    Polynomial normalized() const {
        if (is_zero()) return *this;
        Rat c = rational_content();
        if (sign(leading_coeff()) < 0) c = -c;
        return *this * (Rat(1) / c);
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

inline Polynomial monomial_in(Var v, unsigned k) {
    return v == Var::x ? Polynomial::monomial(k, 0) : Polynomial::monomial(0, k);
}

// Single-divisor division in graded-lex order: a = q*b + r where no term of
// r is divisible by the leading monomial of b.
inline std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    Polynomial q, r, rest = a;
    const Monomial lmb = b.leading_monomial();
    const Rat lcb = b.leading_coeff();
    while (!rest.is_zero()) {
        const Monomial lm = rest.leading_monomial();
        const Rat lc = rest.leading_coeff();
        if (lm.divisible_by(lmb)) {
            const Monomial qm = lm.divided_by(lmb);
            Polynomial t = Polynomial::monomial(qm.xdeg, qm.ydeg, lc / lcb);
            q += t;
            rest -= t * b;
        } else {
            r.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return {q, r};
}

// Quotient a/b when the division is exact, disengaged otherwise.
inline std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline bool divides(const Polynomial& b, const Polynomial& a) {
    return exact_divide(a, b).has_value();
}

}  // namespace w2
