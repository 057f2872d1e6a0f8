#pragma once

#include <utility>

#include "w2/errors.hpp"
#include "w2/gcd.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"

namespace w2 {

/**
 * A polynomial derivation P d/dx + Q d/dy of the plane.  The pair (P, Q)
 * determines the derivation completely, and all structure below (brackets,
 * reduction, proportionality) works coefficientwise on that pair.
 */
struct Derivation {
    Polynomial P;
    Polynomial Q;

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }

    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        return {a.P + b.P, a.Q + b.Q};
    }
    friend Derivation operator-(const Derivation& a, const Derivation& b) {
        return {a.P - b.P, a.Q - b.Q};
    }
    friend Derivation operator*(const Polynomial& f, const Derivation& d) {
        return {f * d.P, f * d.Q};
    }
    friend Derivation operator*(const Rat& s, const Derivation& d) {
        return {d.P * s, d.Q * s};
    }
    friend bool operator==(const Derivation&, const Derivation&) = default;
};

inline Polynomial apply(const Derivation& d, const Polynomial& g) {
    return d.P * g.derivative(Var::x) + d.Q * g.derivative(Var::y);
}

inline RationalFunction partial(const RationalFunction& u, Var v) {
    // quotient rule; the constructor reduces
    return RationalFunction(u.num().derivative(v) * u.den() - u.num() * u.den().derivative(v),
                            u.den() * u.den());
}

inline RationalFunction apply(const Derivation& d, const RationalFunction& u) {
    return RationalFunction(d.P) * partial(u, Var::x) + RationalFunction(d.Q) * partial(u, Var::y);
}

/// Lie bracket [a, b] = a b - b a, again a derivation of the plane.
inline Derivation bracket(const Derivation& a, const Derivation& b) {
    return {apply(a, b.P) - apply(b, a.P), apply(a, b.Q) - apply(b, a.Q)};
}

/// The Hamiltonian-style derivation -u_y d/dx + u_x d/dy attached to a
/// polynomial; it annihilates u by construction.
inline Derivation attached_derivation(const Polynomial& u) {
    return {-u.derivative(Var::y), u.derivative(Var::x)};
}

inline Polynomial jacobian_det(const Polynomial& p, const Polynomial& q) {
    return p.derivative(Var::x) * q.derivative(Var::y) - p.derivative(Var::y) * q.derivative(Var::x);
}

/**
 * The derivation attached to an ordered pair (p, q):
 *   (p q_y - q p_y) d/dx + (q p_x - p q_x) d/dy.
 * It annihilates p/q; applied to p or q it multiplies them by the Jacobian
 * determinant of the pair.
 */
inline Derivation attached_derivation(const Polynomial& p, const Polynomial& q) {
    return {p * q.derivative(Var::y) - q * p.derivative(Var::y),
            q * p.derivative(Var::x) - p * q.derivative(Var::x)};
}

namespace detail {

// Positive rational c with (1/c) * d integer-primitive, taking both
// coefficient polynomials together.  d must be non-zero.
inline Rat joint_rational_content(const Derivation& d) {
    if (d.P.is_zero()) return d.Q.rational_content();
    if (d.Q.is_zero()) return d.P.rational_content();
    const Rat a = d.P.rational_content();
    const Rat b = d.Q.rational_content();
    Int num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return make_rat(num, den);
}

// Sign of the first non-zero coefficient, scanning P's terms in the
// canonical monomial order and then Q's.
inline int leading_sign(const Derivation& d) {
    for (const auto& [mono, coeff] : d.P.terms()) {
        (void)mono;
        return sign(coeff);
    }
    for (const auto& [mono, coeff] : d.Q.terms()) {
        (void)mono;
        return sign(coeff);
    }
    return 0;
}

}  // namespace detail

/**
 * Sign normalization: flip the derivation so the first non-zero coefficient
 * (P scanned before Q, monomials in canonical order) is positive.  This is
 * the representative used whenever two derivations are compared up to a
 * scalar.
 */
inline Derivation normalize(const Derivation& d) {
    if (detail::leading_sign(d) < 0) return {-d.P, -d.Q};
    return d;
}

/// True when a = lambda b for a non-zero rational lambda.
inline bool equal_up_to_scalar(const Derivation& a, const Derivation& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const Rat ca = detail::joint_rational_content(a);
    const Rat cb = detail::joint_rational_content(b);
    return normalize(Rat(1) / ca * a) == normalize(Rat(1) / cb * b);
}

struct ReducedDerivation {
    Derivation delta;    // no common polynomial factor, integer-primitive
    Polynomial content;  // d = content * delta
};

/**
 * Split a non-zero derivation as content * delta where the content collects
 * the common polynomial factor of the two coefficients together with the
 * rational scale, and delta has coprime integer-primitive coefficients.
 * The sign of delta is inherited from the input, not canonicalized; apply
 * normalize() when a sign-independent representative is needed.
 */
inline ReducedDerivation reduce(const Derivation& d) {
    if (d.is_zero()) throw domain_error("cannot reduce the zero derivation");
    const Polynomial c = gcd(d.P, d.Q);
    const auto p = exact_divide(d.P, c);
    const auto q = exact_divide(d.Q, c);
    detail::check(p.has_value() && q.has_value(), "gcd does not divide in reduce");
    Derivation primitive{*p, *q};
    const Rat rho = detail::joint_rational_content(primitive);
    primitive = Rat(1) / rho * primitive;
    return {std::move(primitive), c * rho};
}

/**
 * Exact algebraic dependence test for two rational functions: they are
 * dependent over the constants iff their Jacobian determinant vanishes.
 * Clearing denominators reduces this to a polynomial identity.
 */
inline bool algebraic_dependence(const RationalFunction& u, const RationalFunction& v) {
    const Polynomial ux = u.num().derivative(Var::x) * u.den() - u.num() * u.den().derivative(Var::x);
    const Polynomial uy = u.num().derivative(Var::y) * u.den() - u.num() * u.den().derivative(Var::y);
    const Polynomial vx = v.num().derivative(Var::x) * v.den() - v.num() * v.den().derivative(Var::x);
    const Polynomial vy = v.num().derivative(Var::y) * v.den() - v.num() * v.den().derivative(Var::y);
    return (ux * vy - uy * vx).is_zero();
}

}  // namespace w2
