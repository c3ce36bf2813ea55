#include <catch2/catch_amalgamated.hpp>

#include "mdslab/matrix.hpp"
#include "mdslab/properties.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mdslab;
using testutil::border_tuple;
using testutil::fixture_path;
using testutil::load_tuples;

TEST_CASE("determinant basics") {
    const FieldContext f(3, 0xb);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(determinant(SquareMatrix::identity(f, n)) == 1);
    }
    CHECK(determinant(SquareMatrix::from_rows(f, {{1, 1}, {1, 1}})) == 0);

    const auto m = SquareMatrix::from_rows(f, {{1, 1}, {1, 3}});
    CHECK(determinant(m) == 2);
    CHECK(oracle::cofactor_det(m) == 2);
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
    std::mt19937 rng(1234);
    for (unsigned m : {3u, 4u, 8u}) {
        const FieldContext f = FieldContext::with_default_poly(m);
        for (int it = 0; it < 300; ++it) {
            const std::size_t n = 1 + rng() % 4;
            const SquareMatrix mat = testutil::random_matrix(f, n, rng);
            REQUIRE(determinant(mat) == oracle::cofactor_det(mat));
        }
    }
}

TEST_CASE("inverse") {
    const FieldContext f(3, 0xb);
    CHECK(inverse(SquareMatrix::identity(f, 3)) == SquareMatrix::identity(f, 3));

    const auto diag = SquareMatrix::from_rows(f, {{2, 0, 0}, {0, 5, 0}, {0, 0, 7}});
    const auto diag_inv = inverse(diag);
    CHECK(diag_inv(0, 0) == f.inv(2));
    CHECK(diag_inv(1, 1) == f.inv(5));
    CHECK(diag_inv(2, 2) == f.inv(7));

    CHECK_THROWS_AS(inverse(SquareMatrix::from_rows(f, {{1, 1}, {1, 1}})), MathDomainError);

    std::mt19937 rng(77);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 2 + rng() % 3;
        const SquareMatrix m = testutil::random_nonsingular(f, n, rng);
        CHECK((m * inverse(m)).is_identity());
        CHECK(inverse(inverse(m)) == m);
    }
}

TEST_CASE("the first golden orthogonal matrix inverts to its transpose") {
    const FieldContext f(3, 0xb);
    const auto tuples = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    REQUIRE(tuples.size() == 144);
    const SquareMatrix m = border_tuple(f, tuples[0]);
    CHECK(m == SquareMatrix::from_rows(f, {{1, 2, 4, 6}, {2, 1, 6, 4}, {4, 6, 1, 2}, {6, 4, 2, 1}}));
    CHECK(inverse(m) == m.transpose());
}

TEST_CASE("is_mds") {
    const FieldContext f(3, 0xb);
    CHECK_FALSE(is_mds(SquareMatrix::identity(f, 2)));
    CHECK_FALSE(is_mds(SquareMatrix::identity(f, 4)));
    for (FieldElement a = 2; a < 8; ++a) {
        CHECK(is_mds(SquareMatrix::from_rows(f, {{1, 1}, {1, a}})));
    }
    CHECK_FALSE(is_mds(SquareMatrix::from_rows(f, {{1, 1}, {1, 1}})));

    const auto tuples = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    for (const auto& t : tuples) {
        REQUIRE(is_mds(border_tuple(f, t)));
    }

    const FieldContext f16(4, 0x13);
    for (const auto& t : load_tuples(fixture_path("lightest_omds4_m4.txt"))) {
        REQUIRE(is_mds_orthogonal_fast(border_tuple(f16, t)));
    }
}

TEST_CASE("MDS is invariant under non-singular diagonal sandwiches") {
    std::mt19937 rng(2024);
    const FieldContext f(3, 0xb);
    const auto tuples = load_tuples(fixture_path("lightest_omds4_m3.txt"));
    const SquareMatrix mds = border_tuple(f, tuples[0]);
    const SquareMatrix not_mds = SquareMatrix::identity(f, 4);
    for (int it = 0; it < 500; ++it) {
        const auto d1 = testutil::random_diagonal(f, 4, rng);
        const auto d2 = testutil::random_diagonal(f, 4, rng);
        REQUIRE(is_mds(sandwich(d1, mds, d2)));
        REQUIRE_FALSE(is_mds(sandwich(d1, not_mds, d2)));
    }
}

namespace {

// All 3x3 orthogonal matrices over f, zeros included: free (m11, m12, m21,
// m22) under the single quadratic relation, borders forced.
template <typename Fn>
void for_each_orthogonal_3(const FieldContext& f, Fn&& fn) {
    const unsigned q = f.order();
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            for (unsigned c = 0; c < q; ++c) {
                for (unsigned d = 0; d < q; ++d) {
                    const FieldElement rel = f.mul(static_cast<FieldElement>(a),
                                                   static_cast<FieldElement>(d)) ^
                                             f.mul(static_cast<FieldElement>(b),
                                                   static_cast<FieldElement>(c)) ^
                                             static_cast<FieldElement>(a ^ b ^ c ^ d);
                    if (rel != 1) continue;
                    const FieldElement e00 = static_cast<FieldElement>(a);
                    const FieldElement e01 = static_cast<FieldElement>(b);
                    const FieldElement e10 = static_cast<FieldElement>(c);
                    const FieldElement e11 = static_cast<FieldElement>(d);
                    fn(SquareMatrix(f, 3,
                                    {e00, e01, static_cast<FieldElement>(e00 ^ e01 ^ 1), e10, e11,
                                     static_cast<FieldElement>(e10 ^ e11 ^ 1),
                                     static_cast<FieldElement>(e00 ^ e10 ^ 1),
                                     static_cast<FieldElement>(e01 ^ e11 ^ 1),
                                     static_cast<FieldElement>(e00 ^ e01 ^ e10 ^ e11 ^ 1)}));
                }
            }
        }
    }
}

}  // namespace

TEST_CASE("fast orthogonal MDS test agrees with is_mds on all order-3 orthogonals") {
    const FieldContext f(3, 0xb);
    std::size_t total = 0;
    for_each_orthogonal_3(f, [&](const SquareMatrix& m) {
        ++total;
        REQUIRE(is_orthogonal(m));
        REQUIRE(is_mds_orthogonal_fast(m) == is_mds(m));
    });
    CHECK(total > 0);
}

TEST_CASE("fast orthogonal MDS test rejects zero entries and odd orders") {
    const FieldContext f(3, 0xb);
    CHECK_FALSE(is_mds_orthogonal_fast(SquareMatrix::identity(f, 3)));
    CHECK_THROWS_AS(is_mds_orthogonal_fast(SquareMatrix::identity(f, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_mds_orthogonal_fast(SquareMatrix::identity(f, 5)),
                    std::invalid_argument);
}

TEST_CASE("matrix constructor validates entries") {
    const FieldContext f(3, 0xb);
    CHECK_THROWS_AS(SquareMatrix(f, 2, {1, 2, 3, 8}), std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix(f, 2, {1, 2, 3}), std::invalid_argument);
}
