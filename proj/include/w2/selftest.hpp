#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "w2/annihilator.hpp"
#include "w2/derivation.hpp"
#include "w2/parse.hpp"
#include "w2/polynomial.hpp"
#include "w2/ratfunc.hpp"

namespace w2 {

/** Outcome of one randomized identity suite. */
struct SuiteReport {
    std::string suite;
    unsigned trials = 0;
    unsigned failures = 0;
    std::vector<std::string> counterexamples;  // formatted inputs, first few only

    bool passed() const { return failures == 0; }
};

namespace detail {

class SelftestRng {
  public:
    explicit SelftestRng(std::uint64_t seed) : engine_(seed) {}

    Polynomial polynomial(unsigned maxdeg, bool nonzero = false) {
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::uniform_int_distribution<unsigned> deg(0, maxdeg);
        for (;;) {
            Polynomial out = Polynomial::zero();
            const unsigned terms = deg(engine_) + 2;
            for (unsigned i = 0; i < terms; ++i) {
                const unsigned xd = deg(engine_), yd = deg(engine_);
                if (xd + yd > maxdeg) continue;
                const int c = coeff(engine_);
                if (c != 0) out += Polynomial::monomial(xd, yd, Rat(c));
            }
            if (!nonzero || !out.is_zero()) return out;
        }
    }

    Derivation derivation(unsigned maxdeg, bool nonzero = false) {
        for (;;) {
            Derivation d{polynomial(maxdeg), polynomial(maxdeg)};
            if (!nonzero || !d.is_zero()) return d;
        }
    }

    unsigned pick(unsigned lo, unsigned hi) {
        return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
    }

  private:
    std::mt19937_64 engine_;
};

inline void record_failure(SuiteReport& report, std::string description) {
    ++report.failures;
    if (report.counterexamples.size() < 3) report.counterexamples.push_back(std::move(description));
}

inline std::string show(const Derivation& d) {
    return "(" + format(d.P) + ", " + format(d.Q) + ")";
}

}  // namespace detail

/**
 * Randomized cross-checks of the algebraic identities the whole library
 * leans on.  Each suite draws its own inputs from one seeded stream, so a
 * report is reproducible from the seed alone; counterexamples are printed
 * as expression text ready to replay by hand.
 */
inline std::vector<SuiteReport> run_selftests(std::uint64_t seed, unsigned trials) {
    std::vector<SuiteReport> reports;
    detail::SelftestRng rng(seed);

    {
        SuiteReport r{"jacobi", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Derivation a = rng.derivation(2), b = rng.derivation(2), c = rng.derivation(2);
            const Derivation total =
                bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
            if (!total.is_zero())
                detail::record_failure(r, detail::show(a) + " " + detail::show(b) + " " +
                                              detail::show(c));
        }
        reports.push_back(std::move(r));
    }

    {
        // the generator of u annihilates every rational expression in u
        SuiteReport r{"power-composition kernel", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Polynomial num = rng.polynomial(2, true);
            const Polynomial den = rng.polynomial(1, true);
            const RationalFunction u(num, den);
            if (u.is_constant()) continue;
            const Derivation delta = generator(u).delta;
            RationalFunction composed(Polynomial::monomial(0, 0, Rat(2)));
            const unsigned power = rng.pick(1, 3);
            for (unsigned k = 0; k < power; ++k) composed = composed * u;
            composed = composed + u;
            if (!annihilates(delta, composed))
                detail::record_failure(r, format(num) + " / " + format(den));
        }
        reports.push_back(std::move(r));
    }

    {
        // the derivation attached to a pair rescales each member by the jacobian
        SuiteReport r{"pair-scaling", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Polynomial p = rng.polynomial(3, true);
            const Polynomial q = rng.polynomial(3, true);
            const Derivation d = attached_derivation(p, q);
            Polynomial jac = jacobian_det(p, q);
#ifdef W2_SELFTEST_FAULT
            jac += Polynomial::one();
#endif
            if (apply(d, p) != jac * p || apply(d, q) != jac * q)
                detail::record_failure(r, format(p) + " ; " + format(q));
        }
        reports.push_back(std::move(r));
    }

    {
        // and rescales a degree-m form in the pair by m times the jacobian
        SuiteReport r{"form-scaling", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Polynomial p = rng.polynomial(2, true);
            const Polynomial q = rng.polynomial(2, true);
            const unsigned m = rng.pick(1, 3);
            Polynomial form = Polynomial::zero();
            for (unsigned j = 0; j <= m; ++j) {
                const int c = static_cast<int>(rng.pick(0, 6)) - 3;
                if (c != 0) form += Rat(c) * p.pow(j) * q.pow(m - j);
            }
            if (form.is_zero()) continue;
            const Derivation d = attached_derivation(p, q);
            if (apply(d, form) != Rat(m) * jacobian_det(p, q) * form)
                detail::record_failure(r, format(p) + " ; " + format(q));
        }
        reports.push_back(std::move(r));
    }

    {
        // bracket of two multiples of one derivation stays a multiple of it
        SuiteReport r{"bracket-multiplier", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Polynomial f = rng.polynomial(2);
            const Polynomial g = rng.polynomial(2);
            const Derivation d = rng.derivation(2);
            const Derivation lhs = bracket(Derivation{f * d.P, f * d.Q}, Derivation{g * d.P, g * d.Q});
            const Polynomial mult = f * apply(d, g) - g * apply(d, f);
            if (lhs != Derivation{mult * d.P, mult * d.Q})
                detail::record_failure(r, format(f) + " ; " + format(g) + " ; " + detail::show(d));
        }
        reports.push_back(std::move(r));
    }

    {
        // reduction splits a derivation into content times a primitive part
        SuiteReport r{"reduce-roundtrip", trials, 0, {}};
        for (unsigned i = 0; i < trials; ++i) {
            const Polynomial c = rng.polynomial(2, true);
            const Derivation d0 = rng.derivation(2, true);
            const Derivation d{c * d0.P, c * d0.Q};
            const auto red = reduce(d);
            bool ok = Derivation{red.content * red.delta.P, red.content * red.delta.Q} == d;
            if (ok) {
                const auto again = reduce(red.delta);
                ok = again.delta == red.delta && again.content.is_constant();
            }
            if (!ok) detail::record_failure(r, detail::show(d));
        }
        reports.push_back(std::move(r));
    }

    return reports;
}

inline bool all_passed(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

}  // namespace w2
