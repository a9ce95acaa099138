#include "doctest.h"
#include "fixtures_util.hpp"
#include "fsing/cartier.hpp"

#include <random>

using namespace fsing;
using fsing::test::ideal;
using fsing::test::poly;

namespace {

void check_semilinear(const CartierOperator& T, std::mt19937& rng, int pairs) {
    CHECK(semilinearity_violations(T, rng(), static_cast<std::size_t>(pairs)) == 0);
}

}  // namespace

TEST_CASE("trace examples") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = fsing::test::ring(p, "x");
        auto x = poly(R, "x");
        CHECK(trace(x.pow(p - 1)) == poly(R, "1"));
        if (p > 2) CHECK(trace(x.pow(p - 2)).is_zero());
        CHECK(trace(x.pow(2 * p - 1)) == x);
    }
    auto R = fsing::test::ring(3, "x:1 y:2");
    CHECK(trace(poly(R, "x^2*y^5 + x*y^2")) == poly(R, "y"));
}

TEST_CASE("cartier operator on the polynomial ring") {
    auto R = fsing::test::ring(3, "x");
    auto data = std::make_shared<ExtFrobenius>(Ideal::zero(R));
    CartierOperator T(data, 0);
    auto img = theta_image(T);
    CHECK(submodule_contains(T.module(), img, {T.free().unit(0)}));
    auto h = hsl_iterate(T);
    CHECK(h.index == 1);
    CHECK_FALSE(h.nilpotent);
    // Theta = tau on A
    const FreeModule& F = T.free();
    CHECK(T.apply(F.single(0, poly(R, "x^5"))) == F.single(0, poly(R, "x")));
    CHECK(T.apply(F.single(0, poly(R, "x"))).is_zero());
    CHECK(T.image_degree(5) == 1);
}

TEST_CASE("principal ideal: Theta(v) = tau(f^(p-1) v)") {
    auto R = fsing::test::ring(3, "x y");
    auto f = poly(R, "x^2 + y^2");
    auto data = std::make_shared<ExtFrobenius>(ideal(R, {"x^2 + y^2"}));
    CartierOperator T(data, 1);
    REQUIRE(T.module().rank() == 1);
    const FreeModule& F = T.free();
    std::mt19937 rng(1);
    for (int k = 0; k < 20; ++k) {
        auto v = fsing::test::random_homogeneous(R, 1 + rng() % 6, 3, rng);
        if (v.is_zero()) continue;
        auto expect = trace(f.pow(2) * v);
        CHECK(T.module().is_zero(F.sub(T.apply(F.single(0, v)), F.single(0, expect))));
    }
    check_semilinear(T, rng, 30);
}

TEST_CASE("semigroup ring: Frobenius kills the Ext dual of H^1") {
    auto I = fsing::test::semigroup_ideal();
    auto data = std::make_shared<ExtFrobenius>(I);
    CartierOperator T(data, 3);
    CHECK_FALSE(T.module().is_zero());
    CHECK(T.module().length() == 1);
    CHECK(submodule_contains(T.module(), {}, theta_image(T)));
    auto h = hsl_iterate(T);
    CHECK(h.nilpotent);
    CHECK(h.index == 1);
    CHECK_FALSE(data->delta_kernel(3).empty());
    std::mt19937 rng(2);
    check_semilinear(T, rng, 30);
    check_semilinear(CartierOperator(data, 2), rng, 30);
}

TEST_CASE("stanley-reisner ring: Theta is surjective on every nonzero Ext") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto data = std::make_shared<ExtFrobenius>(fsing::test::stanley_reisner_ideal(p));
        for (int j = 0; j <= 3; ++j) {
            CartierOperator T(data, j);
            std::vector<Vector> units;
            for (std::size_t s = 0; s < T.free().rank(); ++s) units.push_back(T.free().unit(s));
            CHECK(submodule_contains(T.module(), theta_image(T), units));
            CHECK(data->delta_kernel(j).empty());
            auto img = theta_image(T);
            // Theta(N) is Theta-stable
            CHECK(submodule_contains(T.module(), img, theta_image(T, img)));
        }
    }
}
