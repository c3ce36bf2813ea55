#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mdslab/canonical.hpp"
#include "mdslab/enumerate.hpp"
#include "mdslab/properties.hpp"
#include "test_helpers.hpp"

using namespace mdslab;
using testutil::border_tuple;
using testutil::fixture_path;
using testutil::load_tuples;

TEST_CASE("decomposition of simple matrices") {
    const FieldContext f(3, 0xb);

    const auto ones = SquareMatrix::from_rows(f, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    const auto dec1 = decompose_phi(ones);
    CHECK(dec1.d1 == DiagonalMatrix::identity(f, 3));
    CHECK(dec1.d2 == DiagonalMatrix::identity(f, 3));
    CHECK(dec1.m1 == ones);

    const auto twos = SquareMatrix::from_rows(f, {{2, 2}, {2, 2}});
    const auto dec2 = decompose_phi(twos);
    CHECK(dec2.d1 == DiagonalMatrix(f, {2, 2}));
    CHECK(dec2.d2 == DiagonalMatrix::identity(f, 2));
    CHECK(dec2.m1 == SquareMatrix::from_rows(f, {{1, 1}, {1, 1}}));

    const auto m = SquareMatrix::from_rows(f, {{2, 4}, {6, 1}});
    const auto dec3 = decompose_phi(m);
    CHECK(dec3.d1 == DiagonalMatrix(f, {2, 6}));
    CHECK(dec3.d2 == DiagonalMatrix(f, {1, f.mul(4, f.inv(2))}));
    CHECK(dec3.m1(1, 1) == f.mul(f.mul(1, 2), f.inv(f.mul(6, 4))));
    CHECK(is_representative_form(dec3.m1));
    CHECK(compose_phi(dec3) == m);
}

TEST_CASE("decomposition rejects zero entries, naming the cell") {
    const FieldContext f(3, 0xb);
    const auto m = SquareMatrix::from_rows(f, {{1, 1}, {1, 0}});
    CHECK_THROWS_MATCHES(decompose_phi(m), MathDomainError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("(2, 2)")));
}

TEST_CASE("decompose and compose round-trip on random all-nonzero matrices") {
    std::mt19937 rng(4096);
    for (unsigned deg : {3u, 4u}) {
        const FieldContext f = FieldContext::with_default_poly(deg);
        for (int it = 0; it < 1000; ++it) {
            const std::size_t n = 2 + rng() % 4;
            const SquareMatrix m = testutil::random_all_nonzero(f, n, rng);
            const auto dec = decompose_phi(m);
            REQUIRE(is_representative_form(dec.m1));
            REQUIRE(dec.d2[0] == 1);
            REQUIRE(compose_phi(dec) == m);
            // uniqueness under the normalization
            const auto redec = decompose_phi(compose_phi(dec));
            REQUIRE(redec.d1 == dec.d1);
            REQUIRE(redec.d2 == dec.d2);
            REQUIRE(redec.m1 == dec.m1);
        }
    }
}

TEST_CASE("rescaled diagonal pairs compose to the same matrix but are not canonical") {
    const FieldContext f(3, 0xb);
    std::mt19937 rng(5);
    const SquareMatrix m = testutil::random_all_nonzero(f, 3, rng);
    const auto dec = decompose_phi(m);
    const FieldElement lambda = 3;
    std::vector<FieldElement> d1(dec.d1.diagonal().begin(), dec.d1.diagonal().end());
    std::vector<FieldElement> d2(dec.d2.diagonal().begin(), dec.d2.diagonal().end());
    for (auto& v : d1) v = f.mul(v, lambda);
    for (auto& v : d2) v = f.mul(v, f.inv(lambda));
    const PhiDecomposition scaled{DiagonalMatrix(f, d1), dec.m1, DiagonalMatrix(f, d2)};
    CHECK(compose_phi(scaled) == m);        // same product
    CHECK(scaled.d2.diagonal()[0] != 1);    // but violates the convention
    CHECK(decompose_phi(compose_phi(scaled)).d2 == dec.d2);  // canonical form wins
}

namespace {

// First (lexicographically) involutory MDS matrix over GF(2^3) with all
// entries nonzero, found by direct scan.
SquareMatrix find_involutory_mds(const FieldContext& f) {
    std::vector<FieldElement> e(9);
    for (unsigned v = 0; v < 40353607; ++v) {  // 7^9 all-nonzero candidates
        unsigned x = v;
        for (std::size_t i = 0; i < 9; ++i) {
            e[i] = static_cast<FieldElement>(x % 7 + 1);
            x /= 7;
        }
        const SquareMatrix m(f, 3, e);
        if (is_involutory(m) && is_mds(m)) return m;
    }
    throw std::runtime_error("no involutory MDS found");
}

}  // namespace

TEST_CASE("involutory lift family") {
    const FieldContext f(3, 0xb);
    const SquareMatrix m = find_involutory_mds(f);
    REQUIRE(is_involutory(m));
    REQUIRE(is_mds(m));

    const auto dec = decompose_phi(m);
    const InvolutoryLiftFamily family(dec.m1);
    CHECK(family.size() == 49);

    // the original matrix is the member at its own lambda tuple
    CHECK(family.alpha()[0] == dec.d1[0]);
    const std::vector<FieldElement> lambdas{dec.d1[1], dec.d1[2]};
    CHECK(family.member(lambdas) == m);

    // the family has exactly (2^m - 1)^(n-1) distinct members, all involutory
    std::set<std::vector<FieldElement>> seen;
    family.for_each([&](const SquareMatrix& member) {
        REQUIRE(is_involutory(member));
        REQUIRE((member * member).is_identity());
        seen.insert(std::vector<FieldElement>(member.entries().begin(), member.entries().end()));
    });
    CHECK(seen.size() == 49);
}

TEST_CASE("non-liftable representatives are rejected with the failing cell") {
    const FieldContext f(3, 0xb);
    const SquareMatrix m = find_involutory_mds(f);
    const auto dec = decompose_phi(m);
    // perturb one interior entry, keeping the matrix nonsingular
    for (unsigned v = 1; v < 8; ++v) {
        if (v == dec.m1(1, 1)) continue;
        SquareMatrix bad = dec.m1;
        bad(1, 1) = static_cast<FieldElement>(v);
        if (determinant(bad) == 0) continue;
        CHECK_THROWS_AS(InvolutoryLiftFamily(bad), MathDomainError);
        return;
    }
    FAIL("no nonsingular perturbation found");
}

TEST_CASE("every semi-involutory representative admits the alpha factorization") {
    // The lift precondition (inverse entries factor as alpha_i * alpha_j *
    // entry) and the semi-involutory witness coincide on representatives;
    // checked here over every order-3 and order-4 case for m = 3.
    const FieldContext f(3, 0xb);
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
        std::uint64_t seen = 0;
        enumerate_representative_class(
            f, n, MatrixClass::representative_semi_involutory_mds, {},
            [&](const SquareMatrix& m1) {
                ++seen;
                const InvolutoryLiftFamily family(m1);  // throws if not liftable
                REQUIRE(is_involutory(family.member(
                    std::vector<FieldElement>(n - 1, 1))));
            });
        REQUIRE(seen == (n == 3 ? 24 : 48));
    }
    // and conversely, liftable representatives are semi-involutory
    const SquareMatrix m = find_involutory_mds(f);
    const auto rep = decompose_phi(m).m1;
    CHECK(semi_involutory_witness(rep).has_value());
}

TEST_CASE("lift rejects matrices not in representative form") {
    const FieldContext f(3, 0xb);
    const auto m = SquareMatrix::from_rows(f, {{1, 1, 1}, {1, 2, 3}, {2, 4, 5}});
    CHECK_THROWS_AS(InvolutoryLiftFamily(m), MathDomainError);
    CHECK_THROWS_AS(lift_orthogonal(m), MathDomainError);
}

TEST_CASE("orthogonal lift reproduces the golden matrices") {
    const FieldContext f3(3, 0xb);
    const FieldContext f4(4, 0x13);
    const auto tuples3 = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    const auto tuples4 = load_tuples(fixture_path("lightest_omds4_m4.txt"));

    // decompose-then-lift is the identity on orthogonal matrices (unique lift)
    for (std::size_t k = 0; k < tuples3.size(); k += 16) {
        const SquareMatrix m = border_tuple(f3, tuples3[k]);
        const auto dec = decompose_phi(m);
        const SquareMatrix lifted = lift_orthogonal(dec.m1);
        REQUIRE(lifted == m);
        REQUIRE((lifted * lifted.transpose()).is_identity());
    }
    for (std::size_t k = 0; k < tuples4.size(); k += 16) {
        const SquareMatrix m = border_tuple(f4, tuples4[k]);
        REQUIRE(lift_orthogonal(decompose_phi(m).m1) == m);
    }
}

TEST_CASE("orthogonal lift rejects incompatible representatives") {
    const FieldContext f(3, 0xb);
    const auto tuples = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    const auto dec = decompose_phi(border_tuple(f, tuples[0]));
    for (unsigned v = 1; v < 8; ++v) {
        if (v == dec.m1(2, 2)) continue;
        SquareMatrix bad = dec.m1;
        bad(2, 2) = static_cast<FieldElement>(v);
        if (determinant(bad) == 0) continue;
        CHECK_THROWS_AS(lift_orthogonal(bad), MathDomainError);
        return;
    }
    FAIL("no nonsingular perturbation found");
}

TEST_CASE("composing any decomposition of an MDS matrix stays MDS") {
    const FieldContext f(3, 0xb);
    const auto tuples = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    const SquareMatrix m = border_tuple(f, tuples[7]);
    const auto dec = decompose_phi(m);
    CHECK(is_mds(dec.m1));
    CHECK(is_mds(compose_phi(dec)));
}
