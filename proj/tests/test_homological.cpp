#include "doctest.h"
#include "fsing/errors.hpp"
#include "fsing/resolution.hpp"
#include "test_util.hpp"

#include <random>

using namespace fsing;
using fsing::test::ideal;
using fsing::test::poly;

namespace {

// Alternating sum of the Hilbert functions of the free modules in a resolution.
std::int64_t euler_hilbert(const FreeResolution& res, std::int64_t d) {
    const PolyRing& R = res.module(0).R();
    std::int64_t s = 0;
    for (std::size_t k = 0; k <= res.length(); ++k)
        for (auto a : res.module(k).basis_degrees())
            s += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(monomials_of_degree(R, d - a).size());
    return s;
}

}  // namespace

TEST_CASE("resolution examples") {
    auto R = fsing::test::ring(3, "u v z");
    auto res = resolve_quotient(ideal(R, {"u*v", "u*z", "v*z"}));
    CHECK(res.betti() == std::vector<std::size_t>{1, 3, 2});
    CHECK(res.squares_to_zero());
    CHECK(res.is_minimal());
    auto h = hilbert_sample(ideal(R, {"u*v", "u*z", "v*z"}), 0, 6);
    for (std::int64_t d = 0; d <= 6; ++d) CHECK(euler_hilbert(res, d) == h[d]);

    auto P = resolve_quotient(ideal(R, {"u^2 + v*z"}));
    CHECK(P.betti() == std::vector<std::size_t>{1, 1});
    CHECK(resolve_quotient(Ideal::zero(R)).betti() == std::vector<std::size_t>{1});
}

TEST_CASE("resolutions of random ideals are exact") {
    std::mt19937 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = fsing::test::ring(p, "x y z w");
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Polynomial> g;
            for (int k = 0; k < 3; ++k) g.push_back(fsing::test::random_homogeneous(R, 2, 2, rng));
            Ideal I(R, g);
            if (I.is_zero()) continue;
            auto res = resolve_quotient(I);
            CHECK(res.complete());
            CHECK(res.squares_to_zero());
            CHECK(res.is_minimal());
            CHECK(res.length() <= 4);
            auto h = hilbert_sample(I, 0, 6);
            for (std::int64_t d = 0; d <= 6; ++d) CHECK(euler_hilbert(res, d) == h[d]);
        }
    }
}

TEST_CASE("ext examples") {
    auto R = fsing::test::ring(3, "u v z");
    auto e0 = ext_modules(resolve_quotient(Ideal::zero(R)), 3);
    CHECK(e0[0].module().rank() == 1);
    CHECK(e0[0].module().krull_dim() == 3);
    for (int j = 1; j <= 3; ++j) CHECK(e0[j].module().is_zero());

    auto ef = ext_modules(resolve_quotient(ideal(R, {"u^2 + v*z"})), 3);
    CHECK(ef[0].module().is_zero());
    REQUIRE(ef[1].module().rank() == 1);
    CHECK(ef[1].module().degrees()[0] == -2);
    CHECK(ef[1].module().krull_dim() == 2);

    auto es = ext_modules(resolve_quotient(ideal(R, {"u*v", "u*z", "v*z"})), 3);
    CHECK(es[0].module().is_zero());
    CHECK(es[1].module().is_zero());
    CHECK_FALSE(es[2].module().is_zero());
    CHECK(es[3].module().is_zero());
}

TEST_CASE("ext is independent of generator order") {
    auto R = fsing::test::ring(5, "a b c d");
    auto I1 = ideal(R, {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"});
    auto I2 = ideal(R, {"a*c^2 - b^2*d", "c^3 - b*d^2", "b*c - a*d", "b^3 - a^2*c"});
    auto E1 = ext_modules(resolve_quotient(I1), 4);
    auto E2 = ext_modules(resolve_quotient(I2), 4);
    for (int j = 0; j <= 4; ++j)
        for (std::int64_t d = -8; d <= 2; ++d) CHECK(E1[j].module().dim(d) == E2[j].module().dim(d));
}

TEST_CASE("depth and projective dimension") {
    auto R = fsing::test::ring(3, "u v z");
    CHECK(depth_via_AB(ideal(R, {"u*v", "u*z", "v*z"})) == 1);
    auto S = fsing::test::ring(5, "x y");
    CHECK(depth_via_AB(Ideal::zero(S)) == 2);
    auto T = fsing::test::ring(5, "a b c d");
    auto I = ideal(T, {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"});
    CHECK(depth_via_AB(I) == 1);
    // Auslander-Buchsbaum against the Ext side
    auto E = ext_modules(resolve_quotient(I), 4);
    int top = -1;
    for (int j = 0; j <= 4; ++j)
        if (!E[j].module().is_zero()) top = j;
    CHECK(4 - top == 1);
    CHECK_THROWS_AS(depth_via_AB(ideal(S, {"1"})), UnitIdeal);
}

TEST_CASE("chain lifts") {
    auto R = fsing::test::ring(2, "u v z");
    auto I = ideal(R, {"u*v", "u*z", "v*z"});
    auto F = resolve_quotient(I);
    FreeModule A = F.module(0);
    auto id = chain_lift(F, F, {A.unit(0)});
    for (std::size_t k = 1; k <= F.length(); ++k)
        for (std::size_t i = 0; i < F.module(k).rank(); ++i)
            CHECK(id.maps[k][i] == F.module(k).unit(i));

    auto G = F.frobenius(1);
    CHECK(G.squares_to_zero());
    auto Ip = bracket_power(I, 1);
    auto h = hilbert_sample(Ip, 0, 8);
    for (std::int64_t d = 0; d <= 8; ++d) CHECK(euler_hilbert(G, d) == h[d]);
    auto phi = chain_lift(G, F, {A.unit(0)});
    for (std::size_t k = 1; k <= G.length(); ++k)
        for (std::size_t i = 0; i < G.module(k).rank(); ++i)
            CHECK(map_apply(F.module(k - 1), F.map(k), phi.maps[k][i]) ==
                  map_apply(F.module(k - 1), phi.maps[k - 1], G.map(k)[i]));

    auto S = fsing::test::ring(3, "x y");
    auto P = resolve_quotient(ideal(S, {"x*y + y^2"}));
    auto Q = P.frobenius(1);
    auto psi = chain_lift(Q, P, {P.module(0).unit(0)});
    CHECK(psi.maps[1][0] == P.module(1).single(0, poly(S, "(x*y + y^2)^2")));
}

TEST_CASE("module kernels") {
    auto R = fsing::test::ring(3, "u v z");
    auto I = ideal(R, {"u*v", "u*z", "v*z"});
    FreeModule A(R, {0});
    std::vector<Vector> rel;
    for (const auto& g : I.generators()) rel.push_back(A.single(0, g));
    Presentation M(A, rel);
    ModuleMap byu{M, M, {A.single(0, poly(R, "u"))}, 1};
    CHECK(byu.well_defined());
    auto K = module_kernel(byu);
    // (I : u) = (v, z)
    auto expect = colon(I, poly(R, "u"));
    for (const auto& g : K.generators()) CHECK(expect.contains(A.component(g, 0)));
    for (const auto& g : expect.generators()) CHECK(K.coordinates(A.single(0, g)).has_value());

    Presentation Afree(A, {});
    CHECK(module_kernel(ModuleMap{Afree, Afree, {A.single(0, poly(R, "u"))}, 1}).module().is_zero());
    CHECK(module_kernel(ModuleMap{M, M, {A.unit(0)}, 0}).module().is_zero());
}

TEST_CASE("finite length") {
    auto S = fsing::test::ring(5, "x y");
    FreeModule A(S, {0});
    std::int64_t len = -1;
    CHECK(finite_length(Presentation(A, {A.single(0, poly(S, "x")), A.single(0, poly(S, "y"))}), &len));
    CHECK(len == 1);
    auto R = fsing::test::ring(3, "u v z");
    FreeModule B(R, {0});
    CHECK_FALSE(finite_length(Presentation(B, {B.single(0, poly(R, "u*v")), B.single(0, poly(R, "u*z")),
                                               B.single(0, poly(R, "v*z"))})));
    CHECK(finite_length(Presentation(FreeModule(R, {}), {}), &len));
    CHECK(len == 0);
    Presentation box(A, {A.single(0, poly(S, "x^2")), A.single(0, poly(S, "y^3"))});
    CHECK(box.length() == 6);
    CHECK(box.support_degrees() == std::vector<std::int64_t>{0, 1, 2, 3});
}
