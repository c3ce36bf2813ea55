#include <catch2/catch_amalgamated.hpp>

#include "mdslab/field.hpp"
#include "oracles.hpp"

using namespace mdslab;

TEST_CASE("context construction validates the polynomial") {
    CHECK_NOTHROW(FieldContext(3, 0xb));
    CHECK_NOTHROW(FieldContext(4, 0x13));
    CHECK_NOTHROW(FieldContext(4, 0x19));  // x^4 + x^3 + 1

    // x^3 + 1 = (x + 1)(x^2 + x + 1)
    CHECK_THROWS_AS(FieldContext(3, 0x9), std::invalid_argument);
    CHECK_THROWS_WITH(FieldContext(3, 0x9), Catch::Matchers::ContainsSubstring("0x9"));
    // degree mismatch
    CHECK_THROWS_AS(FieldContext(3, 0x13), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(4, 0xb), std::invalid_argument);
    // degree bounds
    CHECK_THROWS_AS(FieldContext(1, 0x3), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(9, 0x211), std::invalid_argument);
}

TEST_CASE("default polynomials are the smallest irreducibles") {
    CHECK(FieldContext::default_poly(3) == 0xb);
    CHECK(FieldContext::default_poly(4) == 0x13);
    for (unsigned m = 2; m <= 8; ++m) {
        const unsigned p = FieldContext::default_poly(m);
        CHECK_NOTHROW(FieldContext(m, p));
        // nothing smaller of the same degree is irreducible
        for (unsigned q = 1u << m; q < p; ++q) {
            CHECK_FALSE(gf2x::is_irreducible(q));
        }
    }
}

TEST_CASE("multiplication matches the schoolbook oracle exhaustively") {
    std::vector<FieldContext> fields;
    for (unsigned m = 2; m <= 8; ++m) fields.push_back(FieldContext::with_default_poly(m));
    fields.push_back(FieldContext(4, 0x19));
    for (const auto& f : fields) {
        for (unsigned a = 0; a < f.order(); ++a) {
            for (unsigned b = 0; b < f.order(); ++b) {
                REQUIRE(f.mul(static_cast<FieldElement>(a), static_cast<FieldElement>(b)) ==
                        oracle::schoolbook_mul(a, b, f.poly(), f.degree()));
            }
        }
    }
}

TEST_CASE("multiplication examples over GF(2^3)/0xb") {
    const FieldContext f(3, 0xb);
    for (unsigned a = 0; a < 8; ++a) CHECK(f.mul(1, static_cast<FieldElement>(a)) == a);
    CHECK(f.mul(2, 4) == 3);  // x * x^2 = x^3 = x + 1
    CHECK(f.mul(6, 6) == 2);
    CHECK(oracle::schoolbook_mul(2, 4, 0xb, 3) == 3);
    CHECK(oracle::schoolbook_mul(6, 6, 0xb, 3) == 2);
}

TEST_CASE("inverses") {
    const FieldContext f(3, 0xb);
    CHECK(f.inv(1) == 1);
    CHECK(f.inv(2) == 5);
    {
        // the exhaustive-oracle route to the same value
        unsigned found = 0;
        for (unsigned b = 1; b < 8; ++b) {
            if (oracle::schoolbook_mul(2, b, 0xb, 3) == 1) found = b;
        }
        CHECK(found == 5);
    }
    CHECK_THROWS_AS(f.inv(0), MathDomainError);

    for (unsigned m = 2; m <= 8; ++m) {
        const FieldContext g = FieldContext::with_default_poly(m);
        for (unsigned a = 1; a < g.order(); ++a) {
            REQUIRE(g.mul(static_cast<FieldElement>(a), g.inv(static_cast<FieldElement>(a))) == 1);
        }
    }
}

TEST_CASE("square roots") {
    const FieldContext f(3, 0xb);
    CHECK(f.sqrt(0) == 0);
    CHECK(f.sqrt(1) == 1);
    CHECK(f.sqrt(2) == 6);  // because 6 * 6 = 2

    for (unsigned m = 2; m <= 8; ++m) {
        const FieldContext g = FieldContext::with_default_poly(m);
        std::vector<bool> seen(g.order(), false);
        for (unsigned a = 0; a < g.order(); ++a) {
            const FieldElement r = g.sqrt(static_cast<FieldElement>(a));
            REQUIRE(g.mul(r, r) == a);
            // Frobenius bijectivity
            REQUIRE(g.sqrt(g.mul(static_cast<FieldElement>(a), static_cast<FieldElement>(a))) ==
                    a);
            seen[r] = true;
        }
        for (unsigned a = 0; a < g.order(); ++a) REQUIRE(seen[a]);
    }
}
