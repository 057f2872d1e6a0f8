#pragma once

#include <random>
#include <vector>

#include "w2/parse.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"
#include "w2/univariate.hpp"

namespace ts {

inline w2::Polynomial P(const char* text) { return w2::parse_polynomial(text); }

inline w2::RationalFunction RF(const char* num, const char* den = "1") {
    return w2::parse_rational(num, den);
}

inline w2::UnivariatePolynomial U(std::vector<w2::Rat> ascending) {
    return w2::UnivariatePolynomial::from_coeffs(std::move(ascending));
}

// Rational root search by trying every p/q with p | constant term and
// q | leading coefficient; independent of the factorization code.
inline bool has_rational_root(const w2::UnivariatePolynomial& f) {
    using namespace w2;
    if (f.is_zero() || f.degree() < 1) return false;
    UnivariatePolynomial g = f.normalized();
    unsigned low = 0;
    while (g.coeff(low) == 0) ++low;
    if (low > 0) return true;  // root at zero
    Int a0 = g.coeff(0).get_num();
    Int an = g.leading_coeff().get_num();
    a0 = abs(a0);
    an = abs(an);
    auto divisors = [](const Int& n) {
        std::vector<Int> out;
        Int root = sqrt(n);
        for (Int d = 1; d <= root; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    std::vector<Int> ps = divisors(a0), qs = divisors(an);
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat r = make_rat(p, q);
            if (g.eval(r) == 0 || g.eval(-r) == 0) return true;
        }
    return false;
}

}  // namespace ts
