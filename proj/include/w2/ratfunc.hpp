#pragma once

#include <utility>

#include "w2/errors.hpp"
#include "w2/gcd.hpp"
#include "w2/polynomial.hpp"
#include "w2/univariate.hpp"

namespace w2 {

// Element of Q(x, y) in canonical form: numerator and denominator coprime,
// denominator integer-primitive with positive leading coefficient.  The
// canonical form is unique, so operator== is field equality.
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}

    RationalFunction(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw domain_error("zero denominator");
        if (num.is_zero()) {
            num_ = Polynomial::zero();
            den_ = Polynomial::one();
            return;
        }
        const Polynomial g = gcd(num, den);
        num_ = exact_divide(num, g).value();
        den_ = exact_divide(den, g).value();
        Rat c = den_.rational_content();
        if (sign(den_.leading_coeff()) < 0) c = -c;
        const Rat inv = Rat(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == Polynomial::one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

// F(u) for univariate F: sum c_i u^i brought over the common denominator
// den(u)^deg(F) and reduced.
inline RationalFunction compose(const UnivariatePolynomial& F, const RationalFunction& u) {
    if (F.is_zero()) return RationalFunction();
    const int k = F.degree();
    Polynomial num = Polynomial::zero();
    for (int i = 0; i <= k; ++i) {
        const Rat c = F.coeff(static_cast<unsigned>(i));
        if (c == 0) continue;
        num += c * u.num().pow(static_cast<unsigned>(i)) * u.den().pow(static_cast<unsigned>(k - i));
    }
    return {num, u.den().pow(static_cast<unsigned>(k))};
}

}  // namespace w2
