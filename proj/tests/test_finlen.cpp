#include "doctest.h"
#include "fsing/errors.hpp"
#include "fsing/finlen/lab.hpp"

#include <random>

using namespace fsing;
using namespace fsing::finlen;

namespace {

using FF = FiniteField;

FinLenModule<FF> module_from(const FF& K, Mat<FF> F, std::vector<Mat<FF>> actions = {}) {
    FinLenModule<FF> M{K, F.size(), std::move(actions), std::move(F)};
    return M;
}

// F(a, b) = (a^p, 0)
FinLenModule<FF> first_coordinate(const FF& K) { return module_from(K, {{1, 0}, {0, 0}}); }

}  // namespace

TEST_CASE("finite field axioms") {
    std::mt19937_64 rng(3);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        FF K(p, e);
        for (int k = 0; k < 200; ++k) {
            auto a = K.random(rng), b = K.random(rng), c = K.random(rng);
            CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
            CHECK(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)));
            CHECK(K.frob(K.add(a, b)) == K.add(K.frob(a), K.frob(b)));
            CHECK(K.frob(K.root_expand(a)[0]) == a);
            if (a) CHECK(K.mul(a, K.inv(a)) == 1);
        }
    }
    CHECK_THROWS_AS(FF(2, 2).inv(0), ZeroInverse);
}

TEST_CASE("rational function field") {
    RationalFunctionField K(3);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto a = K.random(rng), b = K.random(rng);
        CHECK(K.equal(K.mul(a, b), K.mul(b, a)));
        CHECK(K.equal(K.frob(K.mul(a, b)), K.mul(K.frob(a), K.frob(b))));
        // a = sum t^k r_k^p
        auto r = K.root_expand(a);
        auto back = K.zero();
        for (std::size_t j = 0; j < r.size(); ++j) back = K.add(back, K.mul(K.basis(j), K.frob(r[j])));
        CHECK(K.equal(back, a));
        if (!K.is_zero(a)) CHECK(K.equal(K.mul(a, K.inv(a)), K.one()));
    }
    // t is not a p-th power: its expansion is t^1 * 1^p
    auto r = K.root_expand(K.t());
    CHECK(K.is_zero(r[0]));
    CHECK(K.equal(r[1], K.one()));
}

TEST_CASE("closure, spans and nilpotent part") {
    FF K(2, 1);
    auto M = first_coordinate(K);
    CHECK(fstable_closure(M, {M.zero_vec()}).dim() == 0);
    CHECK(fstable_closure(M, {M.unit(0), M.unit(1)}).dim() == 2);
    auto C = fstable_closure(M, {M.unit(1)});
    CHECK(C.dim() == 1);
    CHECK(C.contains(M.unit(1)));
    auto Np = r_span_of_F(M, M.whole());
    CHECK(Np.dim() == 1);
    CHECK(Np.contains(M.unit(0)));
    CHECK_FALSE(is_full(M, M.whole()));
    CHECK(r_span_of_F(M, M.empty()).dim() == 0);
    auto nil = nilpotent_part(M);
    CHECK(nil.dim() == 1);
    CHECK(nil.contains(M.unit(1)));
    CHECK(nilpotent_part(module_from(K, {{0, 0}, {0, 0}})).dim() == 2);
    CHECK(nilpotent_part(module_from(K, {{0, 1}, {1, 0}})).dim() == 0);
}

TEST_CASE("anti-nilpotent examples") {
    FF K(2, 1);
    auto one = module_from(K, {{1}});
    CHECK(anti_nilpotent_by_quotients(one).value);
    auto M = first_coordinate(K);
    auto v = anti_nilpotent_by_quotients(M);
    CHECK_FALSE(v.value);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(quotient_injective(M, *v.witness));
    CHECK_FALSE(anti_nilpotent_by_fullness(M).value);
    FF K4(2, 2);
    std::mt19937_64 rng(1);
    auto big = random_injective_module(K4, 4, rng);
    CHECK_THROWS_AS(fstable_submodules(big), DimensionCapExceeded);
}

TEST_CASE("bijective Frobenius over F_q is full") {
    std::mt19937_64 rng(8);
    FF K(3, 2);
    for (int k = 0; k < 20; ++k) {
        auto M = random_injective_module(K, 3, rng);
        CHECK(is_full(M, M.whole()));
    }
}

TEST_CASE("intersection L = x^n N") {
    std::mt19937_64 rng(12);
    FF K(2, 1);
    for (int k = 0; k < 50; ++k) {
        auto M = random_module(K, 4, rng);
        auto N = fstable_closure(M, {M.unit(rng() % 4)});
        auto L = intersect_xL(M, N, 0);
        // nilpotent action: the intersection vanishes
        CHECK(L.dim() == 0);
        CHECK(fstable_closure(M, L.basis()) == L);
    }
    // an invertible action (outside the nilpotent setting) leaves N unchanged
    FinLenModule<FF> M{K, 2, {{{0, 1}, {1, 0}}}, {{1, 0}, {0, 1}}};
    CHECK(intersect_xL(M, M.whole(), 0).dim() == 2);
}

TEST_CASE("the two anti-nilpotency criteria agree on every module of dimension <= 3 over F_2") {
    auto t = exhaustive_f2(3);
    CHECK(t.checked > 100);
    CHECK(t.discrepancies == 0);
}

TEST_CASE("random modules: criteria agree and twisting preserves the properties") {
    std::mt19937_64 rng(77);
    FF K(2, 1);
    int discrepancies = 0;
    for (int k = 0; k < 100; ++k) {
        auto M = random_module(K, 1 + rng() % 5, rng);
        auto a = anti_nilpotent_by_quotients(M);
        auto b = anti_nilpotent_by_fullness(M);
        if (a.value != b.value) ++discrepancies;
        // r F with r a polynomial in the action
        auto T = M;
        auto R = mat_mul(K, M.actions[0], M.actions[0]);
        for (std::size_t i = 0; i < M.m; ++i) R[i][i] = K.add(R[i][i], 1);
        T.F = mat_mul(K, R, M.F);
        if (is_full(T, T.whole())) CHECK(is_full(M, M.whole()));
        if (anti_nilpotent_by_quotients(T).value) CHECK(a.value);
    }
    CHECK(discrepancies == 0);
}

TEST_CASE("quotients of injective actions over perfect fields stay injective") {
    auto t = perfect_quotients(200, 2024);
    CHECK(t.checked == 200);
    CHECK(t.discrepancies == 0);
    FF K(2, 1);
    CHECK_THROWS_AS(stable_quotient_injective(first_coordinate(K), first_coordinate(K).empty()), PreconditionViolated);
}

TEST_CASE("non-perfect counterexample over F_p(t)") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RationalFunctionField K(p);
        // F(f, g) = (f^p + t g^p, 0)
        FinLenModule<RationalFunctionField> M{K, 2, {}, {{K.one(), K.zero()}, {K.t(), K.zero()}}};
        CHECK(frobenius_injective(M));
        Subspace<RationalFunctionField> L(K, 2);
        L.add(M.unit(0));
        CHECK(fstable_closure(M, L.basis()) == L);
        CHECK_FALSE(stable_quotient_injective(M, L));
        CHECK(nonperfect_counterexample(p));
    }
}
