#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "w2/annihilator.hpp"
#include "w2/derivation.hpp"
#include "w2/errors.hpp"
#include "w2/factor.hpp"
#include "w2/gcd.hpp"
#include "w2/linalg.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"
#include "w2/resultant.hpp"
#include "w2/univariate.hpp"

namespace w2 {

namespace detail {

inline Polynomial swap_vars(const Polynomial& a) {
    Polynomial out = Polynomial::zero();
    for (const auto& [mono, coeff] : a.terms())
        out += Polynomial::monomial(mono.ydeg, mono.xdeg, coeff);
    return out;
}

/**
 * Resultant of f and p - t*q with respect to `elim`, where t is a formal
 * parameter.  The result is encoded in the bivariate type with the
 * surviving variable in the x slot and t in the y slot.  Callers guarantee
 * both arguments have positive degree in `elim`.
 */
inline Polynomial param_resultant(const Polynomial& f, const Polynomial& p, const Polynomial& q,
                                  Var elim) {
    const Var keep = other(elim);
    const int n = f.degree_in(elim);
    const int gdeg = std::max(p.degree_in(elim), q.degree_in(elim));
    check(n > 0 && gdeg > 0, "param_resultant needs positive degrees");
    const auto enc = [&](const Polynomial& c) { return keep == Var::x ? c : swap_vars(c); };

    std::vector<Polynomial> gc(static_cast<std::size_t>(gdeg) + 1);
    std::vector<Polynomial> fc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= gdeg; ++i)
        gc[static_cast<std::size_t>(i)] = enc(p.coeff_in(elim, static_cast<unsigned>(i))) -
                                          Polynomial::y() * enc(q.coeff_in(elim, static_cast<unsigned>(i)));
    for (int i = 0; i <= n; ++i) fc[static_cast<std::size_t>(i)] = enc(f.coeff_in(elim, static_cast<unsigned>(i)));

    const std::size_t size = static_cast<std::size_t>(n + gdeg);
    std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, Polynomial::zero()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= gdeg; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = gc[static_cast<std::size_t>(gdeg - k)];
    for (int j = 0; j < gdeg; ++j)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(j + k)] = fc[static_cast<std::size_t>(n - k)];
    return determinant(s);
}

/**
 * Non-constant inputs only, and a cheap reducibility screen: for either
 * variable appearing in p, a non-trivial gcd with the partial derivative
 * exposes a proper factor (repeated factors and factors missing that
 * variable alike), while genuinely irreducible p always passes.
 */
inline void require_plausibly_irreducible(const Polynomial& p, const char* role) {
    if (p.is_constant()) throw domain_error(std::string(role) + " must be non-constant");
    for (const Var v : {Var::x, Var::y}) {
        if (p.degree_in(v) <= 0) continue;
        if (!gcd(p, p.derivative(v)).is_constant())
            throw domain_error(std::string(role) + " is visibly reducible");
    }
}

// Candidate irreducibles w(t) such that w evaluated on the pair could
// divide f: factor the t-content of the parametric resultant.
inline std::vector<UnivariatePolynomial> divisor_candidates(const Polynomial& f, const Polynomial& p,
                                                            const Polynomial& q, Var elim) {
    const Polynomial r = param_resultant(f, p, q, elim);
    check(!r.is_zero(), "parametric resultant vanished identically");
    const Polynomial tc = content_in(r, Var::x);
    if (tc.is_constant()) return {};
    std::vector<UnivariatePolynomial> out;
    for (const auto& [w, mult] : univariate_factor(to_univariate(tc, Var::y))) {
        (void)mult;  // multiplicity in the content does not bound the one in f
        out.push_back(w);
    }
    return out;
}

inline bool univariate_less(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace detail

/** Factorization f = cofactor(p) * pfree with pfree free of factors in p. */
struct PContentResult {
    Polynomial pfree;
    UnivariatePolynomial cofactor;
};

/**
 * Split off every factor of f of the form w(p) with w a non-constant
 * univariate polynomial.  Candidates come from the t-content of the
 * resultant of f and p - t (taken in a variable both actually use), and
 * each is confirmed by repeated exact division, so the factorization is
 * exact by construction.
 */
inline PContentResult p_content(const Polynomial& f, const Polynomial& p) {
    if (f.is_zero()) throw domain_error("zero polynomial has no content decomposition");
    detail::require_plausibly_irreducible(p, "p");

    std::vector<UnivariatePolynomial> candidates;
    if (p.degree_in(Var::y) > 0) {
        // a factor w(p) would carry positive y-degree, so y-free f admits none
        if (f.degree_in(Var::y) > 0)
            candidates = detail::divisor_candidates(f, p, Polynomial::one(), Var::y);
    } else {
        // p is a polynomial in x alone
        if (f.degree_in(Var::x) > 0)
            candidates = detail::divisor_candidates(f, p, Polynomial::one(), Var::x);
    }

    Polynomial pfree = f;
    UnivariatePolynomial cofactor = UnivariatePolynomial::one();
    for (const auto& w : candidates) {
        const Polynomial wp = w.eval_at(p);
        while (const auto quotient = exact_divide(pfree, wp)) {
            pfree = *quotient;
            cofactor = cofactor * w;
        }
    }
    detail::check(pfree * cofactor.eval_at(p) == f, "content decomposition does not multiply back");
    return {std::move(pfree), std::move(cofactor)};
}

/** The binary form sum coeffs[j] * p^j * q^(deg-j) with deg = coeffs.size()-1. */
inline Polynomial homogeneous_in_pair(const std::vector<Rat>& coeffs, const Polynomial& p,
                                      const Polynomial& q) {
    detail::check(!coeffs.empty(), "empty coefficient list for a binary form");
    const unsigned m = static_cast<unsigned>(coeffs.size() - 1);
    Polynomial out = Polynomial::zero();
    for (unsigned j = 0; j <= m; ++j)
        if (coeffs[j] != 0) out += coeffs[j] * p.pow(j) * q.pow(m - j);
    return out;
}

/** Factorization f = form(p, q) * pqfree with the form homogeneous in (p, q). */
struct PQContentResult {
    Polynomial pqfree;
    std::vector<Rat> form_coeffs;  // coefficients of p^j q^(m-j), j ascending
    unsigned m = 0;                // degree of the form
};

/**
 * Split off the maximal factor of f that is a binary form in the pair
 * (p, q).  The factor q is tested by direct division (it corresponds to
 * the infinite ratio the parameter t cannot reach); every other
 * irreducible form shows up, after substituting the finite ratio p = t*q,
 * in the t-content of a parametric resultant.  Both elimination variables
 * are tried and the candidate sets merged, because a specialization can
 * collapse in one variable while staying visible in the other.
 */
inline PQContentResult pq_content(const Polynomial& f, const Polynomial& p, const Polynomial& q) {
    if (f.is_zero()) throw domain_error("zero polynomial has no content decomposition");
    detail::require_plausibly_irreducible(p, "p");
    detail::require_plausibly_irreducible(q, "q");
    if (jacobian_det(p, q).is_zero()) throw domain_error("p and q are algebraically dependent");

    Polynomial pqfree = f;
    unsigned qmult = 0;
    while (const auto quotient = exact_divide(pqfree, q)) {
        pqfree = *quotient;
        ++qmult;
    }

    std::vector<UnivariatePolynomial> candidates;
    for (const Var elim : {Var::y, Var::x}) {
        if (f.degree_in(elim) <= 0) continue;
        if (std::max(p.degree_in(elim), q.degree_in(elim)) <= 0) continue;
        for (const auto& w : detail::divisor_candidates(f, p, q, elim)) {
            const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                          [&](const UnivariatePolynomial& v) { return v == w; });
            if (!seen) candidates.push_back(w);
        }
    }
    std::sort(candidates.begin(), candidates.end(), detail::univariate_less);

    UnivariatePolynomial ratio_part = UnivariatePolynomial::one();
    for (const auto& w : candidates) {
        std::vector<Rat> wc = w.coeffs();
        const Polynomial form = homogeneous_in_pair(wc, p, q);
        while (const auto quotient = exact_divide(pqfree, form)) {
            pqfree = *quotient;
            ratio_part = ratio_part * w;
        }
    }

    const unsigned m = qmult + static_cast<unsigned>(std::max(ratio_part.degree(), 0));
    std::vector<Rat> form_coeffs(m + 1, Rat(0));
    for (int j = 0; j <= ratio_part.degree(); ++j) form_coeffs[static_cast<std::size_t>(j)] = ratio_part.coeff(j);
    detail::check(pqfree * homogeneous_in_pair(form_coeffs, p, q) == f,
                  "content decomposition does not multiply back");
    return {std::move(pqfree), std::move(form_coeffs), m};
}

/// Exact commutation test for f*delta and g*delta.
inline bool commutes(const Polynomial& f, const Polynomial& g, const Derivation& delta) {
    return (f * apply(delta, g) - g * apply(delta, f)).is_zero();
}

/**
 * Result of certifying a candidate generating function for u.  `accepted`
 * means every necessary condition passed AND a constructive witness was
 * found expressing u through the candidate; the witness is either a
 * univariate polynomial F with u = F(candidate), or a pair of equal-degree
 * binary forms F, G in (num, den) of the candidate with u = F/G.  The
 * check is documented as a certified-witness procedure: a `false` with
 * the bound-exceeded diagnostic means no witness exists within the degree
 * bound, not a proof that none exists at all.
 */
struct GenerativeCheck {
    bool accepted = false;
    std::string diagnostic;
    std::optional<UnivariatePolynomial> univariate_witness;
    std::optional<QVec> form_witness_num;
    std::optional<QVec> form_witness_den;
    unsigned form_degree = 0;

    explicit operator bool() const { return accepted; }
};

namespace detail {

// Decide u = F(w) for polynomials by peeling leading terms: the leading
// monomial of F(w) is LM(w)^deg(F), so each step fixes the top coefficient
// of F and strictly lowers the leading monomial of the remainder.
inline std::optional<UnivariatePolynomial> univariate_witness(const Polynomial& u,
                                                              const Polynomial& w) {
    UnivariatePolynomial F;
    Polynomial rest = u;
    while (!rest.is_zero() && !rest.is_constant()) {
        const Monomial lm = rest.leading_monomial();
        const Monomial wm = w.leading_monomial();
        if (wm.total() == 0 || lm.total() % wm.total() != 0) return std::nullopt;
        const unsigned k = lm.total() / wm.total();
        if (k == 0 || wm.xdeg * k != lm.xdeg || wm.ydeg * k != lm.ydeg) return std::nullopt;
        Rat c = rest.leading_coeff();
        Rat wk = w.leading_coeff();
        for (unsigned i = 1; i < k; ++i) wk *= w.leading_coeff();
        c /= wk;
        rest -= c * w.pow(k);
        F += UnivariatePolynomial::monomial(k, c);
        check(rest.is_zero() || rest.is_constant() ||
                  MonomialOrderDesc{}(lm, rest.leading_monomial()),
              "leading monomial failed to drop");
    }
    if (!rest.is_zero()) F += UnivariatePolynomial(rest.constant_value());
    return F;
}

}  // namespace detail

/**
 * Certify that `candidate` generates a field containing u.  Necessary
 * conditions first: the two functions must be algebraically dependent and
 * share one annihilator generator.  Then a constructive witness is
 * required; its degree is bounded by deg(num u) + deg(den u), and running
 * past the bound is reported distinctly from a structural rejection.
 */
inline GenerativeCheck verify_generative(const RationalFunction& u, const RationalFunction& candidate) {
    if (u.is_constant() || candidate.is_constant())
        throw domain_error("constant function");
    GenerativeCheck result;
    if (!algebraic_dependence(u, candidate)) {
        result.diagnostic = "algebraically independent";
        return result;
    }
    if (!equal_up_to_scalar(generator(u).delta, generator(candidate).delta)) {
        result.diagnostic = "annihilator generators differ";
        return result;
    }

    if (candidate.is_polynomial() && u.is_polynomial()) {
        auto F = detail::univariate_witness(u.num(), candidate.num());
        if (!F) {
            result.diagnostic = "no univariate witness";
            return result;
        }
        detail::check(F->eval_at(candidate.num()) == u.num(), "witness fails to evaluate back");
        result.accepted = true;
        result.univariate_witness = std::move(*F);
        return result;
    }

    // Quotient-of-forms witness u = F(p,q)/G(p,q) for candidate p/q:
    // the condition num(u)*G - den(u)*F = 0 is linear in the coefficients
    // of the two forms, one bounded system per form degree.
    const Polynomial& p = candidate.num();
    const Polynomial& q = candidate.den();
    const unsigned bound = static_cast<unsigned>(u.num().degree() + u.den().degree());
    for (unsigned m = 1; m <= bound; ++m) {
        std::vector<Polynomial> columns;
        for (unsigned j = 0; j <= m; ++j)
            columns.push_back(-(u.den() * p.pow(j) * q.pow(m - j)));
        for (unsigned j = 0; j <= m; ++j)
            columns.push_back(u.num() * p.pow(j) * q.pow(m - j));
        int maxdeg = 0;
        for (const auto& c : columns) maxdeg = std::max(maxdeg, c.degree());
        const auto rows = monomials_up_to(static_cast<unsigned>(maxdeg));
        QMat system(rows.size(), QVec(columns.size(), Rat(0)));
        for (std::size_t cidx = 0; cidx < columns.size(); ++cidx) {
            const QVec col = coefficient_vector(columns[cidx], rows);
            for (std::size_t r = 0; r < rows.size(); ++r) system[r][cidx] = col[r];
        }
        for (const QVec& v : nullspace(std::move(system), columns.size())) {
            const QVec fc(v.begin(), v.begin() + (m + 1));
            const QVec gc(v.begin() + (m + 1), v.end());
            if (homogeneous_in_pair(gc, p, q).is_zero()) continue;
            result.accepted = true;
            result.form_witness_num = fc;
            result.form_witness_den = gc;
            result.form_degree = m;
            return result;
        }
    }
    result.diagnostic = "witness degree bound exceeded";
    return result;
}

enum class CentralizerKind { polynomial_case, rational_case };

/**
 * Symbolic description of the centralizer of f*delta inside the
 * annihilator algebra: multipliers are pfree_part times either all
 * univariate polynomials in p (polynomial case, infinite dimensional) or
 * the binary forms of degree m in (p, q) (rational case, dimension m+1).
 */
struct CentralizerDescription {
    CentralizerKind kind = CentralizerKind::polynomial_case;
    Polynomial pfree_part;
    Polynomial p;
    std::optional<Polynomial> q;  // rational case only
    unsigned form_degree = 0;     // m in the rational case
    Derivation delta;

    std::optional<std::size_t> dimension() const {
        if (kind == CentralizerKind::rational_case) return form_degree + 1;
        return std::nullopt;  // the polynomial case is infinite dimensional
    }

    /**
     * Exact basis of the multiplier polynomials of total degree <= d.
     * In the polynomial case the generators have pairwise distinct
     * degrees, so the cut is per element.  In the rational case a low
     * degree combination can involve higher degree generators, so the
     * truncation is computed as a row-space intersection.
     */
    std::vector<Polynomial> multipliers_up_to(unsigned d) const {
        std::vector<Polynomial> gens;
        if (kind == CentralizerKind::polynomial_case) {
            Polynomial cur = pfree_part;
            while (cur.degree() >= 0 && static_cast<unsigned>(cur.degree()) <= d) {
                gens.push_back(cur);
                cur = cur * p;
            }
            return gens;
        }
        int top = -1;
        for (unsigned j = 0; j <= form_degree; ++j) {
            gens.push_back(pfree_part * p.pow(j) * q->pow(form_degree - j));
            top = std::max(top, gens.back().degree());
        }
        detail::check(top >= 0, "empty centralizer description");
        if (static_cast<unsigned>(top) <= d) return gens;
        const auto basis = monomials_up_to(static_cast<unsigned>(top));
        QMat rows;
        for (const auto& g : gens) rows.push_back(coefficient_vector(g, basis));
        const auto small = monomials_up_to(d);
        const QMat cut = row_space_with_zero_prefix(std::move(rows), basis.size() - small.size());
        std::vector<Polynomial> out;
        for (const auto& v : cut) out.push_back(from_coefficient_vector(v, basis));
        return out;
    }
};

namespace detail {

inline void check_centralizer_preconditions(const Polynomial& f, const RationalFunction& u,
                                            const RationalFunction& candidate,
                                            const Derivation& candidate_delta) {
    if (f.is_zero()) throw domain_error("zero element");
    const auto gen = generator(u);  // rejects constant u
    if (!equal_up_to_scalar(gen.delta, candidate_delta))
        throw domain_error("generator of u does not match the candidate pair");
    const GenerativeCheck cert = verify_generative(u, candidate);
    if (!cert) throw domain_error("candidate not certified generative: " + cert.diagnostic);
}

}  // namespace detail

/**
 * Centralizer of f*delta_u when u is generated by the polynomial p: the
 * multipliers are exactly pfree(f) times polynomials in p.
 */
inline CentralizerDescription centralizer_poly_case(const Polynomial& f, const Polynomial& p,
                                                    const RationalFunction& u) {
    if (f.is_zero()) throw domain_error("zero element");
    if (p.is_constant()) throw domain_error("p must be non-constant");
    const Derivation delta_p = reduce(attached_derivation(p)).delta;
    detail::check_centralizer_preconditions(f, u, RationalFunction(p), delta_p);
    CentralizerDescription out;
    out.kind = CentralizerKind::polynomial_case;
    out.pfree_part = p_content(f, p).pfree;
    out.p = p;
    out.delta = generator(u).delta;
    return out;
}

/**
 * Centralizer of f*delta_u when u is generated by the quotient p/q: the
 * multipliers form the finite dimensional space pqfree(f) times binary
 * forms of degree m in (p, q).
 */
inline CentralizerDescription centralizer_rational_case(const Polynomial& f, const Polynomial& p,
                                                        const Polynomial& q,
                                                        const RationalFunction& u) {
    if (f.is_zero()) throw domain_error("zero element");
    if (p.is_constant() || q.is_constant()) throw domain_error("p and q must be non-constant");
    const Derivation delta_pq = reduce(attached_derivation(p, q)).delta;
    detail::check_centralizer_preconditions(f, u, RationalFunction(p, q), delta_pq);
    const PQContentResult content = pq_content(f, p, q);
    CentralizerDescription out;
    out.kind = CentralizerKind::rational_case;
    out.pfree_part = content.pqfree;
    out.p = p;
    out.q = q;
    out.form_degree = content.m;
    out.delta = generator(u).delta;
    return out;
}

}  // namespace w2
