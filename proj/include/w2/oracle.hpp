#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "w2/annihilator.hpp"
#include "w2/derivation.hpp"
#include "w2/errors.hpp"
#include "w2/linalg.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"
#include "w2/structure.hpp"

namespace w2 {

namespace detail {

/// Number of bivariate monomials of total degree at most d.
inline std::size_t monomial_count(unsigned d) {
    return static_cast<std::size_t>(d + 1) * (d + 2) / 2;
}

// Columns are polynomials, one per unknown coefficient; rows run over all
// monomials any column can touch.  The nullspace of this matrix is exactly
// the solution set of "the combination vanishes identically".
inline std::vector<QVec> vanishing_combinations(const std::vector<Polynomial>& columns) {
    int maxdeg = 0;
    for (const auto& c : columns) maxdeg = std::max(maxdeg, c.degree());
    const auto rows = monomials_up_to(static_cast<unsigned>(maxdeg));
    QMat system(rows.size(), QVec(columns.size(), Rat(0)));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const QVec col = coefficient_vector(columns[j], rows);
        for (std::size_t r = 0; r < rows.size(); ++r) system[r][j] = col[r];
    }
    return nullspace(std::move(system), columns.size());
}

}  // namespace detail

/** Basis of a degree-capped solution space found by exact linear algebra. */
struct DegreeBoundedBasis {
    unsigned degree_bound = 0;
    std::vector<Derivation> basis;
    std::size_t ambient_dimension = 0;  // number of unknown coefficients
};

/**
 * All derivations with components of total degree at most d annihilating
 * u, computed directly from the vanishing condition with no structure
 * theory involved: writing u = num/den, the condition P u_x + Q u_y = 0
 * clears denominators to P A + Q B = 0 with A, B polynomials, one linear
 * equation per monomial.
 */
inline DegreeBoundedBasis annihilator_nullspace(const RationalFunction& u, unsigned d) {
    if (u.is_constant()) throw domain_error("constant function");
    const Polynomial a =
        u.num().derivative(Var::x) * u.den() - u.num() * u.den().derivative(Var::x);
    const Polynomial b =
        u.num().derivative(Var::y) * u.den() - u.num() * u.den().derivative(Var::y);

    const auto unknowns = monomials_up_to(d);
    std::vector<Polynomial> columns;
    columns.reserve(2 * unknowns.size());
    for (const auto& mono : unknowns)
        columns.push_back(Polynomial::monomial(mono.xdeg, mono.ydeg) * a);
    for (const auto& mono : unknowns)
        columns.push_back(Polynomial::monomial(mono.xdeg, mono.ydeg) * b);

    DegreeBoundedBasis out;
    out.degree_bound = d;
    out.ambient_dimension = columns.size();
    for (const QVec& v : detail::vanishing_combinations(columns)) {
        const QVec pc(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(unknowns.size()));
        const QVec qc(v.begin() + static_cast<std::ptrdiff_t>(unknowns.size()), v.end());
        Derivation der{from_coefficient_vector(pc, unknowns), from_coefficient_vector(qc, unknowns)};
        detail::check(annihilates(der, u), "nullspace element fails to annihilate");
        out.basis.push_back(std::move(der));
    }
    return out;
}

/**
 * Comparison of the degree-capped annihilator against the free rank one
 * picture: every solution must be a polynomial multiple h of the reduced
 * generator with deg h <= d - e, where e is the component degree of the
 * generator, so the dimension must be the count of such h.
 */
struct Rank1Report {
    unsigned degree_bound = 0;
    std::size_t expected_dimension = 0;
    std::size_t actual_dimension = 0;
    std::vector<Derivation> violations;  // solutions that are not small multiples
    bool passed = false;
};

inline Rank1Report verify_rank1(const RationalFunction& u, unsigned d) {
    const auto gen = generator(u);
    const int e = std::max(gen.delta.P.degree(), gen.delta.Q.degree());
    const auto oracle = annihilator_nullspace(u, d);

    Rank1Report report;
    report.degree_bound = d;
    report.actual_dimension = oracle.basis.size();
    report.expected_dimension =
        static_cast<int>(d) >= e ? detail::monomial_count(d - static_cast<unsigned>(e)) : 0;
    for (const auto& der : oracle.basis) {
        const auto h = membership(der, u);
        if (!h || h->degree() > static_cast<int>(d) - e) report.violations.push_back(der);
    }
    report.passed =
        report.actual_dimension == report.expected_dimension && report.violations.empty();
    return report;
}

/** Degree-capped basis of the multipliers commuting with f times delta. */
struct CentralizerBasis {
    unsigned degree_bound = 0;
    std::vector<Polynomial> multipliers;
    Derivation delta;
    std::size_t ambient_dimension = 0;
};

/**
 * All polynomials g of total degree at most d with [f delta, g delta] = 0,
 * where delta is the reduced generator of the annihilator of u.  The
 * commutation condition collapses to f delta(g) - g delta(f) = 0, again
 * one linear equation per monomial.
 */
inline CentralizerBasis centralizer_nullspace(const Polynomial& f, const RationalFunction& u,
                                              unsigned d) {
    if (f.is_zero()) throw domain_error("zero element");
    const Derivation delta = generator(u).delta;
    const Polynomial df = apply(delta, f);

    const auto unknowns = monomials_up_to(d);
    std::vector<Polynomial> columns;
    columns.reserve(unknowns.size());
    for (const auto& mono : unknowns) {
        const Polynomial g = Polynomial::monomial(mono.xdeg, mono.ydeg);
        columns.push_back(f * apply(delta, g) - g * df);
    }

    CentralizerBasis out;
    out.degree_bound = d;
    out.delta = delta;
    out.ambient_dimension = columns.size();
    for (const QVec& v : detail::vanishing_combinations(columns)) {
        Polynomial g = from_coefficient_vector(v, unknowns);
        detail::check(commutes(f, g, delta), "nullspace element fails to commute");
        out.multipliers.push_back(std::move(g));
    }
    return out;
}

/** Agreement record between the oracle basis and the symbolic description. */
struct CentralizerAgreement {
    unsigned degree_bound = 0;
    std::size_t oracle_dimension = 0;
    std::size_t description_dimension = 0;
    bool agree = false;
};

/**
 * Cross-check of the symbolic centralizer description against the blind
 * nullspace computation at degree cap d: the two multiplier spaces must
 * coincide exactly as subspaces, not merely in dimension.
 */
inline CentralizerAgreement verify_centralizer(const Polynomial& f, const RationalFunction& u,
                                               const Polynomial& p,
                                               const std::optional<Polynomial>& q, unsigned d) {
    const CentralizerBasis oracle = centralizer_nullspace(f, u, d);
    const CentralizerDescription description =
        q ? centralizer_rational_case(f, p, *q, u) : centralizer_poly_case(f, p, u);
    const auto described = description.multipliers_up_to(d);

    const auto monos = monomials_up_to(d);
    QMat lhs, rhs;
    for (const auto& g : oracle.multipliers) lhs.push_back(coefficient_vector(g, monos));
    for (const auto& g : described) rhs.push_back(coefficient_vector(g, monos));

    CentralizerAgreement report;
    report.degree_bound = d;
    report.oracle_dimension = oracle.multipliers.size();
    report.description_dimension = described.size();
    report.agree = span_equal(lhs, rhs);
    return report;
}

/**
 * Brute-force version of the joint-kernel statement: an algebraically
 * independent pair admits no non-zero derivation of component degree at
 * most d killing both.  Returns true when the joint kernel is trivial.
 */
inline bool joint_annihilator_trivial(const Polynomial& p, const Polynomial& q, unsigned d) {
    if (algebraic_dependence(RationalFunction(p), RationalFunction(q)))
        throw domain_error("algebraically dependent pair");

    const auto unknowns = monomials_up_to(d);
    const Polynomial px = p.derivative(Var::x), py = p.derivative(Var::y);
    const Polynomial qx = q.derivative(Var::x), qy = q.derivative(Var::y);

    // stack the two annihilation conditions into one coefficient matrix
    int maxdeg = 0;
    for (const Polynomial* pp : {&px, &py, &qx, &qy}) maxdeg = std::max(maxdeg, pp->degree());
    const auto rows = monomials_up_to(static_cast<unsigned>(maxdeg) + d);
    const std::size_t cols = 2 * unknowns.size();
    QMat system(2 * rows.size(), QVec(cols, Rat(0)));
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        const Polynomial mono = Polynomial::monomial(unknowns[j].xdeg, unknowns[j].ydeg);
        const QVec c1 = coefficient_vector(mono * px, rows);
        const QVec c2 = coefficient_vector(mono * qx, rows);
        const QVec c3 = coefficient_vector(mono * py, rows);
        const QVec c4 = coefficient_vector(mono * qy, rows);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            system[r][j] = c1[r];
            system[rows.size() + r][j] = c2[r];
            system[r][unknowns.size() + j] = c3[r];
            system[rows.size() + r][unknowns.size() + j] = c4[r];
        }
    }
    return nullspace(std::move(system), cols).empty();
}

}  // namespace w2
