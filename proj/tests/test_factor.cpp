#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "test_support.hpp"
#include "w2/factor.hpp"

using namespace w2;

namespace {

using FactorList = std::vector<std::pair<UnivariatePolynomial, unsigned>>;

UnivariatePolynomial rebuild(const FactorList& factors, const Rat& lc) {
    UnivariatePolynomial prod = UnivariatePolynomial::one() * lc;
    for (const auto& [f, mult] : factors) prod *= f.pow(mult);
    return prod;
}

UnivariatePolynomial random_univariate(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::uniform_int_distribution<long> c(-9, 9);
    std::vector<Rat> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : coeffs) v = Rat(c(rng));
    return UnivariatePolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace

TEST_CASE("squarefree decomposition") {
    const auto t = UnivariatePolynomial::t();

    SECTION("t^3 - t^2 = t^2 (t - 1)") {
        const auto parts = squarefree_decomposition(t.pow(3) - t.pow(2));
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == t - UnivariatePolynomial::one());
        CHECK(parts[0].second == 1);
        CHECK(parts[1].first == t);
        CHECK(parts[1].second == 2);
    }

    SECTION("multiplicities reassemble the input") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 60; ++trial) {
            UnivariatePolynomial f = random_univariate(rng, 3);
            UnivariatePolynomial g = random_univariate(rng, 2);
            if (f.degree() < 1 || g.degree() < 1) continue;
            UnivariatePolynomial prod = f * g.pow(2);
            UnivariatePolynomial back = UnivariatePolynomial::one();
            for (const auto& [part, mult] : squarefree_decomposition(prod)) {
                CHECK(gcd(part, part.derivative()).degree() == 0);
                back *= part.pow(mult);
            }
            CHECK(back * prod.leading_coeff() == prod);
        }
    }

    SECTION("constants and zero") {
        CHECK(squarefree_decomposition(UnivariatePolynomial(Rat(5))).empty());
        CHECK_THROWS_AS(squarefree_decomposition(UnivariatePolynomial()), domain_error);
    }
}

TEST_CASE("univariate factorization over the rationals") {
    const auto t = UnivariatePolynomial::t();
    const auto one = UnivariatePolynomial::one();

    SECTION("t^4 - 1") {
        const auto factors = univariate_factor(t.pow(4) - one);
        REQUIRE(factors.size() == 3);
        CHECK(factors[0].first == t - one);
        CHECK(factors[1].first == t + one);
        CHECK(factors[2].first == t.pow(2) + one);
        for (const auto& [f, mult] : factors) CHECK(mult == 1);
    }

    SECTION("irreducible quadratics and quartics survive whole") {
        for (const auto& f : {t.pow(2) - one * Rat(2), t.pow(2) + t + one, t.pow(4) + one,
                              t.pow(4) - t.pow(2) + one}) {
            const auto factors = univariate_factor(f);
            REQUIRE(factors.size() == 1);
            CHECK(factors[0].first == f);
            CHECK(factors[0].second == 1);
        }
    }

    SECTION("recombination joins modular factors: (t^2-2)(t^2-3)") {
        const auto factors = univariate_factor((t.pow(2) - one * Rat(2)) * (t.pow(2) - one * Rat(3)));
        REQUIRE(factors.size() == 2);
        CHECK(factors[0].first == t.pow(2) - one * Rat(3));
        CHECK(factors[1].first == t.pow(2) - one * Rat(2));
    }

    SECTION("t^4 + 4 splits over the integers") {
        const auto factors = univariate_factor(t.pow(4) + one * Rat(4));
        REQUIRE(factors.size() == 2);
        CHECK(factors[0].first == t.pow(2) - t * Rat(2) + one * Rat(2));
        CHECK(factors[1].first == t.pow(2) + t * Rat(2) + one * Rat(2));
    }

    SECTION("t^12 - 1 into cyclotomic factors") {
        const auto factors = univariate_factor(t.pow(12) - one);
        REQUIRE(factors.size() == 6);
        CHECK(factors[0].first == t - one);
        CHECK(factors[1].first == t + one);
        CHECK(factors[2].first == t.pow(2) - t + one);
        CHECK(factors[3].first == t.pow(2) + one);
        CHECK(factors[4].first == t.pow(2) + t + one);
        CHECK(factors[5].first == t.pow(4) - t.pow(2) + one);
    }

    SECTION("leading coefficients and fractions") {
        // 2t^2 + 4t + 2 = 2 (t+1)^2
        auto factors = univariate_factor(t.pow(2) * Rat(2) + t * Rat(4) + one * Rat(2));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].first == t + one);
        CHECK(factors[0].second == 2);
        // (1/2) t^2 - 1/2
        factors = univariate_factor(t.pow(2) * Rat(1, 2) - one * Rat(1, 2));
        REQUIRE(factors.size() == 2);
        CHECK(factors[0].first == t - one);
        CHECK(factors[1].first == t + one);
        // non-monic irreducible content: 6t^2 - 2t + 8 has no rational root
        factors = univariate_factor(t.pow(2) * Rat(6) - t * Rat(2) + one * Rat(8));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].first == t.pow(2) - t * Rat(1, 3) + one * Rat(4, 3));
    }

    SECTION("large roots survive the lifting bound") {
        const auto a = t - one * Rat(1000000);
        const auto b = t + one * Rat(1000001);
        const auto factors = univariate_factor(a * b);
        REQUIRE(factors.size() == 2);
        CHECK(factors[0].first == a);
        CHECK(factors[1].first == b);
    }

    SECTION("linear factors match the rational root oracle") {
        std::mt19937_64 rng(47);
        int checked = 0;
        for (int trial = 0; trial < 80; ++trial) {
            UnivariatePolynomial f = random_univariate(rng, 4);
            if (f.degree() < 2 || f.coeff(0) == 0) continue;
            bool has_linear = false;
            for (const auto& [factor, mult] : univariate_factor(f))
                if (factor.degree() == 1) has_linear = true;
            CHECK(has_linear == ts::has_rational_root(f));
            ++checked;
        }
        CHECK(checked > 40);
    }

    SECTION("random products reassemble") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 50; ++trial) {
            UnivariatePolynomial f = random_univariate(rng, 4);
            UnivariatePolynomial g = random_univariate(rng, 3);
            if (f.is_zero() || g.is_zero() || f.degree() + g.degree() < 1) continue;
            UnivariatePolynomial prod = f * g;
            const auto factors = univariate_factor(prod);
            CHECK(rebuild(factors, prod.leading_coeff()) == prod);
            for (const auto& [factor, mult] : factors) {
                CHECK(factor.leading_coeff() == 1);
                CHECK(factor.degree() >= 1);
            }
        }
    }

    SECTION("deterministic across repeated runs") {
        const auto f = (t.pow(2) - one * Rat(2)) * (t.pow(3) + t + one).pow(2) * (t + one * Rat(7));
        CHECK(univariate_factor(f) == univariate_factor(f));
    }

    SECTION("degenerate inputs") {
        CHECK(univariate_factor(one * Rat(42)).empty());
        CHECK_THROWS_AS(univariate_factor(UnivariatePolynomial()), domain_error);
    }
}
