#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "w2/errors.hpp"
#include "w2/polynomial.hpp"
#include "w2/rational.hpp"

namespace w2 {

// Element of Q[t], dense coefficient vector with the top entry non-zero.
class UnivariatePolynomial {
public:
    static constexpr int kZeroDegree = -1;

    UnivariatePolynomial() = default;

    explicit UnivariatePolynomial(const Rat& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    explicit UnivariatePolynomial(long constant) : UnivariatePolynomial(Rat(constant)) {}

    static UnivariatePolynomial from_coeffs(std::vector<Rat> ascending) {
        UnivariatePolynomial p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    static UnivariatePolynomial monomial(unsigned deg, const Rat& coeff = Rat(1)) {
        UnivariatePolynomial p;
        if (coeff != 0) {
            p.coeffs_.assign(deg + 1, Rat(0));
            p.coeffs_[deg] = coeff;
        }
        return p;
    }

    static UnivariatePolynomial t() { return monomial(1); }
    static UnivariatePolynomial one() { return UnivariatePolynomial(Rat(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rat coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rat(0);
    }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat leading_coeff() const {
        detail::check(!coeffs_.empty(), "leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    UnivariatePolynomial operator-() const {
        UnivariatePolynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c));
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const Rat& s) {
        if (s == 0) return {};
        UnivariatePolynomial out = a;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) { return *this = *this + o; }
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) { return *this = *this - o; }
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }

    UnivariatePolynomial pow(unsigned k) const {
        UnivariatePolynomial out = one();
        for (unsigned i = 0; i < k; ++i) out *= *this;
        return out;
    }

    UnivariatePolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
        return from_coeffs(std::move(c));
    }

    UnivariatePolynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rat(1) / leading_coeff());
    }

    Rat eval(const Rat& v) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    // Composition at a bivariate argument: sum c_i * p^i by Horner.
    Polynomial eval_at(const Polynomial& p) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + Polynomial(*it);
        return acc;
    }

    Rat rational_content() const {
        if (is_zero()) return Rat(0);
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        return make_rat(abs(num_gcd), den_lcm);
    }

    // Integer-primitive associate with positive leading coefficient.
    UnivariatePolynomial normalized() const {
        if (is_zero()) return {};
        Rat c = rational_content();
        if (sign(leading_coeff()) < 0) c = -c;
        return *this * (Rat(1) / c);
    }

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline std::pair<UnivariatePolynomial, UnivariatePolynomial> divide(
    const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    UnivariatePolynomial q, r = a;
    const Rat lcb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
        UnivariatePolynomial t = UnivariatePolynomial::monomial(shift, r.leading_coeff() / lcb);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

inline std::optional<UnivariatePolynomial> exact_divide(
    const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// Monic gcd in Q[t]; gcd(0, 0) = 0.
inline UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divide(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Conversion between Q[t] and the copy of Q[v] inside Q[x, y].
inline UnivariatePolynomial to_univariate(const Polynomial& p, Var v) {
    detail::check(p.has_only(v), "to_univariate: polynomial involves the other variable");
    std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1, Rat(0));
    for (const auto& [m, coeff] : p.terms()) c[m.deg(v)] = coeff;
    return UnivariatePolynomial::from_coeffs(std::move(c));
}

inline Polynomial from_univariate(const UnivariatePolynomial& u, Var v) {
    Polynomial p;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeffs()[i] == 0) continue;
        p.add_term(v == Var::x ? Monomial{static_cast<unsigned>(i), 0}
                               : Monomial{0, static_cast<unsigned>(i)},
                   u.coeffs()[i]);
    }
    return p;
}

}  // namespace w2
