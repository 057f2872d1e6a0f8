#pragma once

#include <vector>

#include "w2/errors.hpp"
#include "w2/polynomial.hpp"

namespace w2 {

/**
 * Determinant of a square matrix over Q[x, y] by fraction-free Bareiss
 * elimination.  Every interior division is exact (division by the previous
 * pivot in an integral domain); pivoting takes the first non-zero entry in
 * the current column, with the sign of the row swap tracked.
 */
inline Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::one();
    for (const auto& row : m) detail::check(row.size() == n, "determinant of non-square matrix");

    int sign = 1;
    Polynomial prev = Polynomial::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Polynomial::zero();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(t, prev);
                detail::check(q.has_value(), "Bareiss division is not exact");
                m[i][j] = *q;
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/**
 * Sylvester matrix of a and b with respect to v, sized
 * (deg_v a + deg_v b):  the first deg_v(a) rows hold shifted copies of the
 * descending v-coefficients of b, the remaining deg_v(b) rows shifted
 * copies of those of a.  resultant(a, b, v) is its determinant; the sign
 * convention is fixed by this layout.  With deg_v(a) = m and b constant in
 * v, the matrix degenerates to diag(b, ..., b) and the resultant is b^m;
 * if both are constant in v it is the empty determinant 1.
 */
inline std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& a,
                                                             const Polynomial& b, Var v) {
    if (a.is_zero() || b.is_zero()) throw domain_error("resultant of the zero polynomial");
    const int m = std::max(a.degree_in(v), 0);
    const int n = std::max(b.degree_in(v), 0);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, Polynomial::zero()));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
                b.coeff_in(v, static_cast<unsigned>(n - k));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(m + j)][static_cast<std::size_t>(j + k)] =
                a.coeff_in(v, static_cast<unsigned>(m - k));
    return s;
}

// Resultant of a and b with respect to v: a polynomial in the other
// variable.  Zero exactly when a and b share a factor of positive v-degree
// (or drop degree jointly); callers relying on vanishing behaviour must
// ensure positive v-degrees.
inline Polynomial resultant(const Polynomial& a, const Polynomial& b, Var v) {
    return determinant(sylvester_matrix(a, b, v));
}

}  // namespace w2
