#pragma once

#include <vector>

#include "w2/errors.hpp"
#include "w2/polynomial.hpp"
#include "w2/rational.hpp"

namespace w2 {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/**
 * Reduced row echelon form in place over the rationals; returns the pivot
 * columns.  Pivots are the first non-zero entry scanning down each column,
 * so the result is deterministic and two assemblies of the same matrix
 * reduce identically.
 */
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        const Rat inv = Rat(1) / Rat(m[r][c]);
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/**
 * Basis of the right nullspace of m, viewed as a matrix with `cols`
 * columns.  One basis vector per free column, free columns ascending, the
 * free coordinate set to 1; this is the canonical basis the elimination
 * order induces.
 */
inline std::vector<QVec> nullspace(QMat m, std::size_t cols) {
    for (auto& row : m) detail::check(row.size() == cols, "ragged matrix in nullspace");
    const auto pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (const auto c : pivots) is_pivot[c] = 1;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row-space equality: reduce both and compare the non-zero rows.
inline bool span_equal(QMat a, QMat b) {
    const auto drop_zero = [](QMat& m, std::size_t npiv) { m.resize(npiv); };
    drop_zero(a, rref(a).size());
    drop_zero(b, rref(b).size());
    return a == b;
}

/**
 * Basis of the intersection of the row space of m with the subspace of
 * vectors whose first `prefix` coordinates vanish.  In reduced echelon form
 * a row with pivot at or past `prefix` is supported entirely there, and
 * those rows span the intersection: any intersection vector has zero
 * coefficients on the rows pivoted inside the prefix.
 */
inline QMat row_space_with_zero_prefix(QMat m, std::size_t prefix) {
    const auto pivots = rref(m);
    QMat out;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= prefix) out.push_back(std::move(m[r]));
    return out;
}

/**
 * All monomials of total degree at most d, largest first in the canonical
 * graded lexicographic order.  With this ordering, the basis for a larger
 * bound D extends the basis for d by a prefix of higher-degree monomials,
 * which is what the truncation helpers rely on.
 */
inline std::vector<Monomial> monomials_up_to(unsigned d) {
    std::vector<Monomial> out;
    for (unsigned total = d + 1; total-- > 0;)
        for (unsigned xd = total + 1; xd-- > 0;) out.push_back(Monomial{xd, total - xd});
    return out;
}

inline QVec coefficient_vector(const Polynomial& g, const std::vector<Monomial>& basis) {
    QVec v(basis.size(), Rat(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Rat c = g.coeff(basis[i].xdeg, basis[i].ydeg);
        if (c != 0) ++found;
        v[i] = c;
    }
    detail::check(found == g.terms().size(), "polynomial not supported on the basis");
    return v;
}

inline Polynomial from_coefficient_vector(const QVec& v, const std::vector<Monomial>& basis) {
    detail::check(v.size() == basis.size(), "coefficient vector length mismatch");
    Polynomial g = Polynomial::zero();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) g += Polynomial::monomial(basis[i].xdeg, basis[i].ydeg, v[i]);
    return g;
}

}  // namespace w2
