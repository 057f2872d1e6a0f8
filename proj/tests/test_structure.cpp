#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "w2/structure.hpp"

using namespace w2;
using ts::P;
using ts::RF;
using ts::U;

TEST_CASE("p_content splits off every factor coming from p") {
    SECTION("power of p") {
        const auto r = p_content(P("x^3 + x^2*y"), P("x"));
        CHECK(r.pfree == P("x + y"));
        CHECK(r.cofactor == U({0, 0, 1}));
    }

    SECTION("two distinct shifts of p") {
        const Polynomial p = P("x^2 + y");
        const auto r = p_content(p * (p + Polynomial::one()), p);
        CHECK(r.pfree == Polynomial::one());
        CHECK(r.cofactor == U({0, 1, 1}));
    }

    SECTION("nothing to split") {
        const auto r = p_content(P("x + y"), P("x"));
        CHECK(r.pfree == P("x + y"));
        CHECK(r.cofactor == UnivariatePolynomial::one());
    }

    SECTION("variable degrees rule factors out without any resultant") {
        // w(x^2 + y) always involves y, so a y-free f admits no such factor
        const auto r = p_content(P("x^2 + 1"), P("x^2 + y"));
        CHECK(r.pfree == P("x^2 + 1"));
        CHECK(r.cofactor == UnivariatePolynomial::one());

        const auto s = p_content(P("y^3"), P("x"));
        CHECK(s.pfree == P("y^3"));
        CHECK(s.cofactor == UnivariatePolynomial::one());
    }

    SECTION("planted irreducible shifts are recovered exactly") {
        struct Case {
            Polynomial p;
            UnivariatePolynomial w;
            Polynomial cofree;
        };
        const Case cases[] = {
            {P("x^2 + y"), U({3, 0, 1}), P("x + 1")},
            {P("x*y + 1"), U({-1, 1}), P("x^2 + y^2")},
            {P("y"), U({0, 0, 0, 2, 1}), P("x + 2")},
        };
        for (const auto& c : cases) {
            const Polynomial f = c.w.eval_at(c.p) * c.cofree;
            const auto r = p_content(f, c.p);
            CHECK(r.pfree * r.cofactor.eval_at(c.p) == f);
            CHECK(r.cofactor == c.w);
            CHECK(r.pfree == c.cofree);
        }
    }

    SECTION("idempotent on the free part") {
        const auto r = p_content(P("x^4*y + x^2*y + y + x"), P("x^2 + 1"));
        const auto again = p_content(r.pfree, P("x^2 + 1"));
        CHECK(again.cofactor == UnivariatePolynomial::one());
        CHECK(again.pfree == r.pfree);
    }

    SECTION("bad inputs are rejected") {
        CHECK_THROWS_AS(p_content(Polynomial::zero(), P("x")), domain_error);
        CHECK_THROWS_AS(p_content(P("x"), P("5")), domain_error);
        CHECK_THROWS_AS(p_content(P("x"), P("x^2")), domain_error);
        CHECK_THROWS_AS(p_content(P("x"), P("x*y")), domain_error);
        CHECK_THROWS_AS(p_content(P("x"), P("x^2 + 2*x*y + y^2")), domain_error);
    }
}

TEST_CASE("pq_content extracts the binary form part of f") {
    SECTION("monomial in the pair") {
        const auto r = pq_content(P("x^2*y"), P("x"), P("y"));
        CHECK(r.pqfree == Polynomial::one());
        CHECK(r.m == 3);
        CHECK(r.form_coeffs == std::vector<Rat>{0, 0, 1, 0});
    }

    SECTION("difference form times a free factor") {
        const auto r = pq_content(P("(x + y^2) * (x - y)"), P("x"), P("y"));
        CHECK(r.pqfree == P("x + y^2"));
        CHECK(r.m == 1);
        CHECK(r.form_coeffs == std::vector<Rat>{-1, 1});
    }

    SECTION("pure power of q") {
        const auto r = pq_content(P("y^3 * (x + y + 1)"), P("x"), P("y"));
        CHECK(r.pqfree == P("x + y + 1"));
        CHECK(r.m == 3);
        CHECK(r.form_coeffs == std::vector<Rat>{1, 0, 0, 0});
    }

    SECTION("product of two distinct ratio forms") {
        const auto r = pq_content(P("(x^2 - y^2) * (x + y + 1)"), P("x"), P("y"));
        CHECK(r.pqfree == P("x + y + 1"));
        CHECK(r.m == 2);
        CHECK(r.form_coeffs == std::vector<Rat>{-1, 0, 1});
    }

    SECTION("pair of uneven degrees") {
        const auto r = pq_content(P("y^2 * (x + 1)"), P("y^2 + x"), P("x"));
        CHECK(r.pqfree == P("x + 1"));
        CHECK(r.m == 1);
        CHECK(r.form_coeffs == std::vector<Rat>{-1, 1});  // p - q = y^2
    }

    SECTION("no form at all") {
        const auto r = pq_content(P("x + y^2"), P("x"), P("y"));
        CHECK(r.pqfree == P("x + y^2"));
        CHECK(r.m == 0);
        CHECK(r.form_coeffs == std::vector<Rat>{1});
    }

    SECTION("idempotent on the free part") {
        const auto r = pq_content(P("(x^2 - y^2) * (x + y + 1)"), P("x"), P("y"));
        const auto again = pq_content(r.pqfree, P("x"), P("y"));
        CHECK(again.m == 0);
        CHECK(again.pqfree == r.pqfree);
    }

    SECTION("bad inputs are rejected") {
        CHECK_THROWS_AS(pq_content(Polynomial::zero(), P("x"), P("y")), domain_error);
        CHECK_THROWS_AS(pq_content(P("x"), P("x"), P("3")), domain_error);
        CHECK_THROWS_AS(pq_content(P("x"), P("x^2"), P("y")), domain_error);
        // independent-looking but dependent pair
        CHECK_THROWS_AS(pq_content(P("x*y"), P("x"), P("x + 1")), domain_error);
    }
}

TEST_CASE("forms in a coprime independent pair are pairwise coprime") {
    const Polynomial p = P("x^2 + y");
    const Polynomial q = P("x + y^2");
    std::vector<Polynomial> forms = {q};
    for (long a : {0L, 1L, 2L, -1L, 3L}) forms.push_back(p + Rat(a) * q);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            CHECK(gcd(forms[i], forms[j]).is_constant());
}

TEST_CASE("commutation test for multiples of one derivation") {
    const Derivation euler{P("x"), P("y")};
    CHECK(commutes(P("x^3"), P("x^2*y"), euler));
    CHECK(commutes(P("x^2 - y^2"), P("x*y"), euler));
    CHECK_FALSE(commutes(P("y"), P("y^2"), Derivation{P("0"), P("1")}));
    CHECK_FALSE(commutes(P("x"), P("y^2"), euler));
    // every element commutes with itself and with constants times itself
    const Polynomial f = P("x^2*y + 3*x");
    CHECK(commutes(f, f, euler));
    CHECK(commutes(f, Rat(7) * f, euler));
}

TEST_CASE("generative certification of a candidate") {
    SECTION("polynomial in a polynomial") {
        const auto r = verify_generative(RF("x^2"), RF("x"));
        REQUIRE(r.accepted);
        REQUIRE(r.univariate_witness.has_value());
        CHECK(*r.univariate_witness == U({0, 0, 1}));

        const auto s = verify_generative(RF("x^4 + 2*x^2 + 7"), RF("x^2"));
        REQUIRE(s.accepted);
        CHECK(*s.univariate_witness == U({7, 2, 1}));

        const auto composed = verify_generative(RF("(x^2 + y)^3 - (x^2 + y)"), RF("x^2 + y"));
        REQUIRE(composed.accepted);
        CHECK(*composed.univariate_witness == U({0, -1, 0, 1}));
    }

    SECTION("rational function of a rational candidate") {
        const auto r = verify_generative(RF("x*y + x^2", "y^2"), RF("x", "y"));
        REQUIRE(r.accepted);
        REQUIRE(r.form_witness_num.has_value());
        REQUIRE(r.form_witness_den.has_value());
        CHECK(r.form_degree == 2);
        const Polynomial fn = homogeneous_in_pair(*r.form_witness_num, P("x"), P("y"));
        const Polynomial fd = homogeneous_in_pair(*r.form_witness_den, P("x"), P("y"));
        REQUIRE_FALSE(fd.is_zero());
        CHECK(P("x*y + x^2") * fd == P("y^2") * fn);
    }

    SECTION("independent functions are refused") {
        const auto r = verify_generative(RF("x"), RF("y"));
        CHECK_FALSE(r.accepted);
        CHECK(r.diagnostic == "algebraically independent");
    }

    SECTION("independent despite sharing both variables") {
        const auto r = verify_generative(RF("x + y"), RF("x - y"));
        CHECK_FALSE(r.accepted);
        CHECK(r.diagnostic == "algebraically independent");
    }

    SECTION("dependent with matching generator but no witness") {
        const auto r = verify_generative(RF("x^2"), RF("x^3"));
        CHECK_FALSE(r.accepted);
        CHECK(r.diagnostic == "no univariate witness");
    }

    SECTION("degree bound exceeded is reported distinctly") {
        const auto r = verify_generative(RF("x", "y"), RF("x^2", "y^2"));
        CHECK_FALSE(r.accepted);
        CHECK(r.diagnostic == "witness degree bound exceeded");
    }

    SECTION("constant inputs are rejected") {
        CHECK_THROWS_AS(verify_generative(RF("5"), RF("x")), domain_error);
        CHECK_THROWS_AS(verify_generative(RF("x"), RF("3", "4")), domain_error);
    }
}

TEST_CASE("centralizer description in the polynomial case") {
    SECTION("coordinate function") {
        const auto d = centralizer_poly_case(P("y"), P("x"), RF("x"));
        CHECK(d.kind == CentralizerKind::polynomial_case);
        CHECK(d.pfree_part == P("y"));
        CHECK_FALSE(d.dimension().has_value());
        CHECK(equal_up_to_scalar(d.delta, Derivation{P("0"), P("1")}));

        const auto basis = d.multipliers_up_to(2);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == P("y"));
        CHECK(basis[1] == P("x*y"));
    }

    SECTION("multiplier with its own p part") {
        const auto d = centralizer_poly_case(P("x^2*y"), P("x"), RF("x"));
        CHECK(d.pfree_part == P("y"));
        const auto basis = d.multipliers_up_to(4);
        REQUIRE(basis.size() == 4);
        CHECK(basis[0] == P("y"));
        CHECK(basis[1] == P("x*y"));
        CHECK(basis[2] == P("x^2*y"));
        CHECK(basis[3] == P("x^3*y"));
    }

    SECTION("u may be any polynomial generated by p") {
        const auto d = centralizer_poly_case(P("y"), P("x^2 + y"), RF("(x^2 + y)^2 + 1"));
        CHECK(d.kind == CentralizerKind::polynomial_case);
        CHECK(d.pfree_part == P("y"));
        CHECK(d.p == P("x^2 + y"));
    }

    SECTION("soundness: every basis pair commutes and contains f") {
        const Polynomial f = P("x^2*y");
        const auto d = centralizer_poly_case(f, P("x"), RF("x"));
        const auto basis = d.multipliers_up_to(5);
        bool found_f = false;
        for (const auto& g : basis) {
            CHECK(commutes(f, g, d.delta));
            for (const auto& h : basis) CHECK(commutes(g, h, d.delta));
            if (g == f) found_f = true;
        }
        CHECK(found_f);
    }

    SECTION("preconditions") {
        CHECK_THROWS_AS(centralizer_poly_case(Polynomial::zero(), P("x"), RF("x")), domain_error);
        CHECK_THROWS_AS(centralizer_poly_case(P("y"), P("2"), RF("x")), domain_error);
        // generator mismatch
        CHECK_THROWS_AS(centralizer_poly_case(P("y"), P("x"), RF("y")), domain_error);
        // p does not generate u, only the other way around
        CHECK_THROWS_AS(centralizer_poly_case(P("y"), P("x^2"), RF("x")), domain_error);
        // constant u
        CHECK_THROWS_AS(centralizer_poly_case(P("y"), P("x"), RF("5")), domain_error);
    }
}

TEST_CASE("centralizer description in the rational case") {
    SECTION("monomial element over x/y") {
        const auto d = centralizer_rational_case(P("x^2*y"), P("x"), P("y"), RF("x", "y"));
        CHECK(d.kind == CentralizerKind::rational_case);
        CHECK(d.pfree_part == Polynomial::one());
        CHECK(d.form_degree == 3);
        REQUIRE(d.dimension().has_value());
        CHECK(*d.dimension() == 4);

        const auto basis = d.multipliers_up_to(3);
        REQUIRE(basis.size() == 4);
        QMat got, want;
        const auto monos = monomials_up_to(3);
        for (const auto& g : basis) got.push_back(coefficient_vector(g, monos));
        for (const char* s : {"x^3", "x^2*y", "x*y^2", "y^3"})
            want.push_back(coefficient_vector(P(s), monos));
        CHECK(span_equal(got, want));
    }

    SECTION("free factor plus a linear form") {
        const auto d =
            centralizer_rational_case(P("(x + y^2) * (x - y)"), P("x"), P("y"), RF("x", "y"));
        CHECK(d.pfree_part == P("x + y^2"));
        CHECK(d.form_degree == 1);
        CHECK(*d.dimension() == 2);
        const auto basis = d.multipliers_up_to(3);
        REQUIRE(basis.size() == 2);
        QMat got, want;
        const auto monos = monomials_up_to(3);
        for (const auto& g : basis) got.push_back(coefficient_vector(g, monos));
        want.push_back(coefficient_vector(P("(x + y^2) * x"), monos));
        want.push_back(coefficient_vector(P("(x + y^2) * y"), monos));
        CHECK(span_equal(got, want));
    }

    SECTION("element with no form part") {
        const auto d = centralizer_rational_case(P("x + y^2"), P("x"), P("y"), RF("x", "y"));
        CHECK(d.pfree_part == P("x + y^2"));
        CHECK(d.form_degree == 0);
        CHECK(*d.dimension() == 1);
        const auto basis = d.multipliers_up_to(2);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == P("x + y^2"));
    }

    SECTION("degree cut below the top generator uses the true intersection") {
        const auto d = centralizer_rational_case(P("(x^2 + y) * y"), P("x^2 + y"), P("y"),
                                                 RF("x^2 + y", "y"));
        CHECK(d.pfree_part == Polynomial::one());
        CHECK(d.form_degree == 2);
        // generators y^2, (x^2+y)y, (x^2+y)^2 have degrees 2, 3, 4
        const auto cut = d.multipliers_up_to(3);
        REQUIRE(cut.size() == 2);
        QMat got, want;
        const auto monos = monomials_up_to(4);
        for (const auto& g : cut) {
            CHECK(g.degree() <= 3);
            got.push_back(coefficient_vector(g, monos));
        }
        want.push_back(coefficient_vector(P("y^2"), monos));
        want.push_back(coefficient_vector(P("(x^2 + y) * y"), monos));
        CHECK(span_equal(got, want));
    }

    SECTION("soundness: basis elements commute pairwise and with f") {
        const Polynomial f = P("(x^2 - y^2) * (x + y + 1)");
        const auto d = centralizer_rational_case(f, P("x"), P("y"), RF("x", "y"));
        const auto basis = d.multipliers_up_to(4);
        for (const auto& g : basis) {
            CHECK(commutes(f, g, d.delta));
            for (const auto& h : basis) CHECK(commutes(g, h, d.delta));
        }
    }

    SECTION("preconditions") {
        CHECK_THROWS_AS(
            centralizer_rational_case(Polynomial::zero(), P("x"), P("y"), RF("x", "y")),
            domain_error);
        CHECK_THROWS_AS(centralizer_rational_case(P("y"), P("x"), P("2"), RF("x", "y")),
                        domain_error);
        // generator mismatch: u = x is generated by x alone, not by the pair
        CHECK_THROWS_AS(centralizer_rational_case(P("y"), P("x"), P("y"), RF("x")), domain_error);
        // candidate pair fails the generative certificate
        CHECK_THROWS_AS(
            centralizer_rational_case(P("y"), P("x^2"), P("y^2"), RF("x", "y")), domain_error);
    }
}
