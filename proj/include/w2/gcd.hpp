#pragma once

#include <utility>

#include "w2/errors.hpp"
#include "w2/polynomial.hpp"
#include "w2/univariate.hpp"

namespace w2 {

/**
 * Pseudo-remainder of a by b with respect to v:
 *
 *     lc_v(b)^(deg_v a - deg_v b + 1) * a  =  q * b + prem(a, b, v)
 *
 * with deg_v prem < deg_v b.  Coefficient arithmetic stays in the polynomial
 * ring, no fractions are introduced.
 */
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Var v) {
    const int db = b.degree_in(v);
    detail::check(db >= 0, "pseudo_remainder by zero");
    const Polynomial lcb = b.coeff_in(v, static_cast<unsigned>(db));
    int e = a.degree_in(v) - db + 1;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const int da = a.degree_in(v);
        const Polynomial lca = a.coeff_in(v, static_cast<unsigned>(da));
        a = lcb * a - lca * monomial_in(v, static_cast<unsigned>(da - db)) * b;
        --e;
    }
    for (; e > 0; --e) a = lcb * a;
    return a;
}

namespace detail {

// gcd for polynomials lying in one copy of Q[v], normalized integer-primitive
// with positive leading coefficient.
inline Polynomial gcd_single_var(const Polynomial& a, const Polynomial& b, Var v) {
    UnivariatePolynomial g = gcd(to_univariate(a, v), to_univariate(b, v));
    return from_univariate(g, v).normalized();
}

}  // namespace detail

// Content of p with respect to v: the gcd of the coefficients of the powers
// of v, a polynomial in the other variable (normalized).  Zero for p = 0.
inline Polynomial content_in(const Polynomial& p, Var v) {
    if (p.is_zero()) return Polynomial::zero();
    const Var w = other(v);
    UnivariatePolynomial acc;
    for (int k = 0; k <= p.degree_in(v); ++k) {
        Polynomial c = p.coeff_in(v, static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        acc = gcd(acc, to_univariate(c, w));
        if (acc.degree() == 0) break;
    }
    return from_univariate(acc, w).normalized();
}

inline Polynomial primitive_part_in(const Polynomial& p, Var v) {
    if (p.is_zero()) return p;
    auto q = exact_divide(p, content_in(p, v));
    detail::check(q.has_value(), "content does not divide its polynomial");
    return *q;
}

/**
 * Polynomial gcd in Q[x, y] by the subresultant polynomial remainder
 * sequence, taken in x with coefficients in Q[y] (contents split off and
 * handled by univariate gcd).  The result is the unique associate that is
 * integer-primitive with positive leading coefficient in graded-lex order.
 * gcd(a, 0) = normalized a; gcd(0, 0) is a domain error.
 */
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();

    const Polynomial pa = a.normalized();
    const Polynomial pb = b.normalized();
    const int dxa = pa.degree_in(Var::x);
    const int dxb = pb.degree_in(Var::x);

    if (dxa == 0 && dxb == 0) return detail::gcd_single_var(pa, pb, Var::y);
    // A divisor of an x-free polynomial is x-free, and an x-free divisor of
    // q divides every x-power coefficient of q, hence cont(q, x).
    if (dxa == 0) return detail::gcd_single_var(pa, content_in(pb, Var::x), Var::y);
    if (dxb == 0) return detail::gcd_single_var(pb, content_in(pa, Var::x), Var::y);

    const Polynomial ca = content_in(pa, Var::x);
    const Polynomial cb = content_in(pb, Var::x);
    const Polynomial cg = detail::gcd_single_var(ca, cb, Var::y);

    Polynomial A = exact_divide(pa, ca).value();
    Polynomial B = exact_divide(pb, cb).value();
    if (A.degree_in(Var::x) < B.degree_in(Var::x)) std::swap(A, B);

    Polynomial g = Polynomial::one();
    Polynomial h = Polynomial::one();
    for (;;) {
        if (B.degree_in(Var::x) == 0) {
            // The remainder sequence dropped to an x-free element: the
            // primitive parts are coprime in x.
            break;
        }
        const int d = A.degree_in(Var::x) - B.degree_in(Var::x);
        Polynomial R = pseudo_remainder(A, B, Var::x);
        if (R.is_zero()) break;
        A = B;
        {
            auto q = exact_divide(R, g * h.pow(static_cast<unsigned>(d)));
            detail::check(q.has_value(), "subresultant division is not exact");
            B = *q;
        }
        g = A.coeff_in(Var::x, static_cast<unsigned>(A.degree_in(Var::x)));
        if (d > 0) {
            auto nh = exact_divide(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
            detail::check(nh.has_value(), "subresultant h-update is not exact");
            h = *nh;
        }
    }

    Polynomial result;
    if (B.degree_in(Var::x) == 0) {
        result = cg;
    } else {
        result = (cg * primitive_part_in(B, Var::x)).normalized();
    }

    detail::check(divides(result, a) && divides(result, b), "gcd does not divide its inputs");
    return result;
}

}  // namespace w2
