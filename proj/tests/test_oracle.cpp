#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "w2/oracle.hpp"

using namespace w2;
using ts::P;
using ts::RF;

TEST_CASE("degree-capped annihilator by blind nullspace") {
    SECTION("frozen dimensions") {
        CHECK(annihilator_nullspace(RF("x", "y"), 1).basis.size() == 1);
        CHECK(annihilator_nullspace(RF("x", "y"), 2).basis.size() == 3);
        CHECK(annihilator_nullspace(RF("x"), 0).basis.size() == 1);
        CHECK(annihilator_nullspace(RF("x^2 + y^2"), 1).basis.size() == 1);
    }

    SECTION("degree zero solutions are the constant multiples of the generator") {
        const auto o = annihilator_nullspace(RF("x"), 0);
        REQUIRE(o.basis.size() == 1);
        CHECK(equal_up_to_scalar(o.basis[0], Derivation{P("0"), P("1")}));
        CHECK(o.ambient_dimension == 2);
    }

    SECTION("every solution annihilates and dimensions never decrease in d") {
        for (const char* nums : {"x^2*y", "x^2 + y"}) {
            std::size_t prev = 0;
            for (unsigned d = 0; d <= 3; ++d) {
                const auto o = annihilator_nullspace(RF(nums), d);
                for (const auto& der : o.basis) CHECK(annihilates(der, RF(nums)));
                CHECK(o.basis.size() >= prev);
                prev = o.basis.size();
            }
        }
    }

    SECTION("constants are refused") {
        CHECK_THROWS_AS(annihilator_nullspace(RF("5"), 2), domain_error);
        CHECK_THROWS_AS(annihilator_nullspace(RF("x", "x"), 2), domain_error);
    }
}

TEST_CASE("rank one structure confirmed degree by degree") {
    SECTION("frozen reports") {
        const auto a = verify_rank1(RF("x", "y"), 2);
        CHECK(a.passed);
        CHECK(a.expected_dimension == 3);
        CHECK(a.actual_dimension == 3);
        CHECK(a.violations.empty());

        const auto b = verify_rank1(RF("x^2"), 3);
        CHECK(b.passed);
        CHECK(b.expected_dimension == 10);

        const auto c = verify_rank1(RF("x"), 0);
        CHECK(c.passed);
        CHECK(c.expected_dimension == 1);
    }

    SECTION("generator of higher component degree shifts the count") {
        // delta for x^2/(x + y^2) has component degree 2
        const auto r = verify_rank1(RF("x^2", "x + y^2"), 1);
        CHECK(r.passed);
        CHECK(r.expected_dimension == 0);
        const auto s = verify_rank1(RF("x^2", "x + y^2"), 3);
        CHECK(s.passed);
        CHECK(s.expected_dimension == 3);
    }
}

TEST_CASE("degree-capped centralizer by blind nullspace") {
    SECTION("frozen dimensions") {
        CHECK(centralizer_nullspace(P("x^2*y"), RF("x", "y"), 3).multipliers.size() == 4);
        CHECK(centralizer_nullspace(P("1"), RF("x", "y"), 0).multipliers.size() == 1);
        // total-degree cap: only y and x*y fit below degree 2
        const auto o = centralizer_nullspace(P("y"), RF("x"), 2);
        REQUIRE(o.multipliers.size() == 2);
        QMat got, want;
        const auto monos = monomials_up_to(2);
        for (const auto& g : o.multipliers) got.push_back(coefficient_vector(g, monos));
        want.push_back(coefficient_vector(P("y"), monos));
        want.push_back(coefficient_vector(P("x*y"), monos));
        CHECK(span_equal(got, want));
    }

    SECTION("solutions commute and span a space containing f itself") {
        const Polynomial f = P("x^2 - y^2");
        const auto o = centralizer_nullspace(f, RF("x", "y"), 2);
        const auto monos = monomials_up_to(2);
        QMat got, with_f;
        for (const auto& g : o.multipliers) {
            CHECK(commutes(f, g, o.delta));
            got.push_back(coefficient_vector(g, monos));
            with_f.push_back(got.back());
        }
        with_f.push_back(coefficient_vector(f, monos));
        CHECK(span_equal(got, with_f));
    }

    SECTION("zero element is refused") {
        CHECK_THROWS_AS(centralizer_nullspace(Polynomial::zero(), RF("x"), 1), domain_error);
    }
}

TEST_CASE("centralizer oracle agrees with the symbolic description") {
    SECTION("polynomial case") {
        const auto r = verify_centralizer(P("x^2*y"), RF("x"), P("x"), std::nullopt, 4);
        CHECK(r.agree);
        CHECK(r.oracle_dimension == 4);
        CHECK(r.description_dimension == 4);
    }

    SECTION("rational case, full span visible") {
        const auto r = verify_centralizer(P("x^2*y"), RF("x", "y"), P("x"), P("y"), 3);
        CHECK(r.agree);
        CHECK(r.oracle_dimension == 4);
        CHECK(r.description_dimension == 4);
    }

    SECTION("rational case with a free factor") {
        const auto r = verify_centralizer(P("x + y^2"), RF("x", "y"), P("x"), P("y"), 2);
        CHECK(r.agree);
        CHECK(r.oracle_dimension == 1);
        CHECK(r.description_dimension == 1);
    }

    SECTION("rational case where the cap cuts into the span") {
        const auto r = verify_centralizer(P("(x^2 + y) * y"), RF("x^2 + y", "y"), P("x^2 + y"),
                                          P("y"), 3);
        CHECK(r.agree);
        CHECK(r.oracle_dimension == 2);
        CHECK(r.description_dimension == 2);
    }
}

TEST_CASE("independent pairs admit no joint annihilator") {
    CHECK(joint_annihilator_trivial(P("x"), P("y"), 3));
    CHECK(joint_annihilator_trivial(P("x + y"), P("x - y"), 3));
    CHECK(joint_annihilator_trivial(P("x^2 + y"), P("x*y + 1"), 2));
    CHECK_THROWS_AS(joint_annihilator_trivial(P("x"), P("x^2"), 2), domain_error);
    CHECK_THROWS_AS(joint_annihilator_trivial(P("x*y"), P("3*x*y + 2"), 1), domain_error);
}
