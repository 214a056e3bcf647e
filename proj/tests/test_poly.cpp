#include <catch2/catch_amalgamated.hpp>

#include <qrefl/poly.hpp>

using namespace qrefl;

namespace {

std::string factored(const IntPoly& p) { return factor_over_Z(p).str(); }

}  // namespace

TEST_CASE("arithmetic and evaluation") {
    IntPoly a{ 1, 7 }, b{ 1, 15 }, c{ 1, 5 };
    IntPoly prod = a * b * c;
    CHECK(prod == IntPoly({ 1, 27, 215, 525 }));
    CHECK(prod.eval(1) == 768);
    IntPoly cs2{ 1, 72, 1722, 16496, 64653 };
    CHECK(cs2.eval(1) == 82944);
    IntPoly table1[] = {
        { 1, 63, 987, 925 },
        { 1, 315, 23667, 23353 },
        { 1, 36, 438, 1924, 1521 },
        { 1, 72, 1722, 14176, 12525 },
        { 1, 180, 10326, 195220, 185073 },
        { 1, 180, 10614, 207892, 197457 },
        { 1, 165, 10010, 265210, 2657589, 2402225 },
    };
    for (const auto& p : table1) CHECK(p.eval(-1) == 0);
}

TEST_CASE("exact division") {
    IntPoly p{ 1, 63, 987, 925 };
    auto q = p.divide_exact(IntPoly{ 1, 1 });
    REQUIRE(q);
    CHECK(*q == IntPoly({ 1, 62, 925 }));
    CHECK_FALSE(p.divide_exact(IntPoly{ 1, 2 }));
}

TEST_CASE("Table 1 factorizations") {
    CHECK(factored(IntPoly{ 1, 63, 987, 925 }) == "(1+t)(1+25t)(1+37t)");
    CHECK(factored(IntPoly{ 1, 315, 23667, 23353 }) == "(1+t)(1+121t)(1+193t)");
    CHECK(factored(IntPoly{ 1, 36, 438, 1924, 1521 }) == "(1+t)(1+9t)(1+13t)^2");
    CHECK(factored(IntPoly{ 1, 72, 1722, 14176, 12525 }) == "(1+t)(1+25t)(1+46t+501t^2)");
    CHECK(factored(IntPoly{ 1, 180, 10326, 195220, 185073 }) == "(1+t)(1+49t)(1+130t+3777t^2)");
    CHECK(factored(IntPoly{ 1, 180, 10614, 207892, 197457 }) == "(1+t)(1+61t)(1+118t+3237t^2)");
    CHECK(factored(IntPoly{ 1, 165, 10010, 265210, 2657589, 2402225 }) ==
          "(1+t)(1+25t)(1+37t)(1+49t)(1+53t)");
    CHECK(factored(IntPoly{ 1, 1 }) == "(1+t)");
}

TEST_CASE("Table 2 factorizations") {
    // codimension generating functions; cubic residuals with no linear factor
    // are irreducible outright
    auto fQ = factor_over_Z(IntPoly{ 1, 63, 1239, 10793 });
    CHECK(fQ.certified);
    REQUIRE(fQ.factors.size() == 1);
    CHECK(fQ.factors[0].first.degree() == 3);

    auto fR = factor_over_Z(IntPoly{ 1, 315, 27447, 1181837 });
    CHECK(fR.certified);
    CHECK(fR.factors.size() == 1);

    CHECK(factored(IntPoly{ 1, 36, 438, 2180, 4257 }) == "(1+11t)(1+25t+163t^2+387t^3)");
    CHECK(factored(IntPoly{ 1, 72, 1722, 16496, 64653 }) == "(1+23t)(1+49t+595t^2+2811t^3)");
    CHECK(factored(IntPoly{ 1, 180, 10974, 272420, 3034185 }) == "(1+71t)(1+109t+3235t^2+42735t^3)");
    CHECK(factored(IntPoly{ 1, 180, 10614, 244628, 2336577 }) == "(1+59t)(1+121t+3475t^2+39603t^3)");

    // degree-5 irreducible: complete quadratic search finds nothing
    auto fU = factor_over_Z(IntPoly{ 1, 165, 10010, 279290, 3658149, 23423905 });
    CHECK(fU.certified);
    REQUIRE(fU.factors.size() == 1);
    CHECK(fU.factors[0].first.degree() == 5);
}

TEST_CASE("factor expansion round-trips") {
    IntPoly polys[] = {
        { 1, 63, 987, 925 },
        { 1, 36, 438, 1924, 1521 },
        { 1, 72, 1722, 14176, 12525 },
        { 1, 165, 10010, 265210, 2657589, 2402225 },
        { 1, 63, 1239, 10793 },
        { 1, 165, 10010, 279290, 3658149, 23423905 },
        { 1, 27, 215, 525 },
        { 1, 9, 23, 15 },
    };
    for (const auto& p : polys) {
        auto f = factor_over_Z(p);
        CHECK(f.expand() == p);
        for (const auto& [g, m] : f.factors) {
            (void)m;
            for (const Int& c : g.coeffs()) CHECK(c > 0);  // positive coefficients
        }
    }
}

TEST_CASE("quadratic and quartic residual handling") {
    // (1+46t+501t^2) alone
    auto f = factor_over_Z(IntPoly{ 1, 46, 501 });
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == IntPoly({ 1, 46, 501 }));
    // product of two irreducible quadratics (degree-4 complete search)
    IntPoly q1{ 1, 1, 1 }, q2{ 1, 3, 3 };
    auto f4 = factor_over_Z(q1 * q2);
    REQUIRE(f4.factors.size() == 2);
    CHECK(f4.expand() == q1 * q2);
    // quadratic times cubic (degree-5 complete search)
    IntPoly cu{ 1, 2, 2, 3 };
    auto f5 = factor_over_Z(q1 * cu);
    CHECK(f5.expand() == q1 * cu);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == q1);
    CHECK(f5.factors[1].first == cu);
}

TEST_CASE("rejects bad inputs") {
    CHECK_THROWS(factor_over_Z(IntPoly{ 2, 1 }));
    CHECK_THROWS(factor_over_Z(IntPoly{ 1, 0, 0, 0, 0, 0, 0, 0, 0, 1 }));
}
