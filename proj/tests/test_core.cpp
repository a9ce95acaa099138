#include "doctest.h"
#include "fsing/errors.hpp"
#include "fsing/fp_matrix.hpp"
#include "test_util.hpp"

#include <random>

using namespace fsing;
using fsing::test::poly;

TEST_CASE("field_inv examples") {
    CHECK(field_inv(2, PrimeField(5)) == 3);
    CHECK(field_inv(1, PrimeField(7)) == 1);
    CHECK(field_inv(4, PrimeField(7)) == 2);
    CHECK_THROWS_AS(field_inv(0, PrimeField(5)), ZeroInverse);
    CHECK_THROWS_AS(PrimeField(4), NonPrimeCharacteristic);
}

TEST_CASE("field_inv is an involution") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 65521u}) {
        PrimeField F(p);
        std::uniform_int_distribution<std::uint32_t> d(1, p - 1);
        for (int k = 0; k < 50; ++k) {
            Coeff a = d(rng);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.inv(F.inv(a)) == a);
        }
    }
}

TEST_CASE("mat_kernel examples") {
    PrimeField F3(3), F5(5);
    CHECK(mat_kernel(FpMatrix::identity(F3, 2)).empty());
    auto z = mat_kernel(FpMatrix(F3, 2, 3));
    CHECK(z.size() == 3);

    FpMatrix M = FpMatrix::from_rows(F5, {{1, 1}, {2, 2}});
    auto K = mat_kernel(M);
    REQUIRE(K.size() == 1);
    // brute-force oracle: all 25 vectors, collect the null ones
    std::vector<FpVector> nulls;
    for (Coeff a = 0; a < 5; ++a)
        for (Coeff b = 0; b < 5; ++b)
            if (M.apply({a, b}) == FpVector{0, 0}) nulls.push_back({a, b});
    CHECK(nulls.size() == 5);  // a 1-dimensional space over F_5
    // the kernel vector is a multiple of (1, 4)
    CHECK(F5.mul(K[0][0], 4) == K[0][1]);
    CHECK(M.apply(K[0]) == FpVector{0, 0});
}

TEST_CASE("rank-nullity and annihilation on random matrices") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        PrimeField F(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (int k = 0; k < 40; ++k) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            FpMatrix M(F, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) M.at(i, j) = (rng() % 3 == 0) ? 0 : d(rng);
            auto K = M.kernel();
            CHECK(M.rank() + K.size() == c);
            for (const auto& v : K) CHECK(M.apply(v) == FpVector(r, 0));
            if (!K.empty()) {
                FpMatrix B(F, K.size(), c);
                for (std::size_t i = 0; i < K.size(); ++i)
                    for (std::size_t j = 0; j < c; ++j) B.at(i, j) = K[i][j];
                CHECK(B.rank() == K.size());
            }
        }
    }
}

TEST_CASE("weighted_degree examples") {
    auto R = fsing::test::ring(5, "u:2 v:2 y:1 z:2");
    CHECK(weighted_degree(poly(R, "u*v")) == 4);
    CHECK(weighted_degree(poly(R, "z*(v - y^2)")) == 4);
    auto S = fsing::test::ring(5, "x y");
    CHECK_FALSE(weighted_degree(poly(S, "x + y^2")).has_value());
    CHECK_THROWS_AS(weighted_degree(Polynomial(S)), ZeroPolynomial);
}

TEST_CASE("polynomial ring axioms on random triples") {
    auto R = fsing::test::ring(3, "x:1 y:2 z:1");
    std::mt19937 rng(3);
    for (int k = 0; k < 30; ++k) {
        auto a = fsing::test::random_homogeneous(R, 1 + rng() % 3, 3, rng);
        auto b = fsing::test::random_homogeneous(R, 1 + rng() % 3, 3, rng);
        auto c = fsing::test::random_homogeneous(R, 1 + rng() % 3, 3, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero())
            CHECK(*weighted_degree(a * b) == *weighted_degree(a) + *weighted_degree(b));
    }
}

TEST_CASE("frobenius power equals p-th power over F_p") {
    auto R = fsing::test::ring(3, "x y");
    auto f = poly(R, "x + 2*y + x*y");
    CHECK(f.frobenius_power(3) == f.pow(3));
    CHECK(f.frobenius_power(9) == f.pow(9));
}

TEST_CASE("expression parser errors carry positions") {
    auto R = fsing::test::ring(5, "x y");
    try {
        poly(R, "x + w");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK(poly(R, "(x+y)^2 - x^2 - 2*x*y") == poly(R, "y^2"));
    CHECK(poly(R, "7*x") == poly(R, "2*x"));
}
