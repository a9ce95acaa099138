#include "doctest.h"
#include "fsing/errors.hpp"
#include "fsing/fp_matrix.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace fsing;
using fsing::test::ideal;
using fsing::test::poly;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& v) {
    std::vector<std::string> s;
    for (const auto& f : v) s.push_back(f.to_string());
    std::sort(s.begin(), s.end());
    return s;
}

// Brute-force membership for a degree-d form: f in I_d iff f lies in the
// F_p-span of {m * g : g generator, m monomial of complementary degree}.
bool in_span_bruteforce(const Ideal& I, const Polynomial& f, std::int64_t d) {
    const auto& R = *I.ring();
    auto basis = monomials_of_degree(R, d);
    std::vector<Polynomial> span;
    for (const auto& g : I.generators()) {
        auto dg = *weighted_degree(g);
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(R, d - dg)) span.push_back(g.times_monomial(m));
    }
    auto column = [&](const Polynomial& h) {
        FpVector v(basis.size(), 0);
        for (const auto& t : h.terms())
            v[std::find(basis.begin(), basis.end(), t.m) - basis.begin()] = t.c;
        return v;
    };
    FpMatrix M(R.field(), basis.size(), span.size());
    for (std::size_t j = 0; j < span.size(); ++j) {
        auto v = column(span[j]);
        for (std::size_t i = 0; i < basis.size(); ++i) M.at(i, j) = v[i];
    }
    return M.solve(column(f)).has_value();
}

}  // namespace

TEST_CASE("groebner basis of a monomial ideal is its generators") {
    auto R = fsing::test::ring(3, "u v z");
    auto I = ideal(R, {"u*v", "u*z", "v*z"});
    CHECK(strings(I.reduced_groebner()) == std::vector<std::string>{"u*v", "u*z", "v*z"});
}

TEST_CASE("toric relation by elimination") {
    auto R = fsing::test::ring(5, "s:1 t:1 a:2 b:2 c:2 d:2");
    auto I = ideal(R, {"a - s^2", "b - s*t", "c - s*t", "d - t^2"});
    auto J = eliminate(I, 2);
    auto S = fsing::test::ring(5, "a b c d");
    // b - c and bc - ad generate the kernel
    CHECK(J.contains(poly(R, "b - c")));
    CHECK(J.contains(poly(R, "b*c - a*d")));
    CHECK_FALSE(J.contains(poly(R, "a*b - c*d")));
    for (const auto& g : J.reduced_groebner()) {
        for (const auto& t : g.terms()) {
            CHECK(t.m.e[0] == 0);
            CHECK(t.m.e[1] == 0);
        }
    }
}

TEST_CASE("normal form examples") {
    auto R = fsing::test::ring(5, "a b c d");
    auto I = ideal(R, {"b*c - a*d"});
    CHECK(I.normal_form(poly(R, "b*c")) == poly(R, "a*d"));
    CHECK(I.normal_form(poly(R, "b*c - a*d")).is_zero());
    auto nf = normal_form(poly(R, "b^2*c"), {poly(R, "b*c - a*d")});
    CHECK(nf.remainder == poly(R, "a*b*d"));
    CHECK(nf.quotients.size() == 1);
    CHECK(nf.quotients[0] * poly(R, "b*c - a*d") + nf.remainder == poly(R, "b^2*c"));
}

TEST_CASE("colon examples") {
    auto R = fsing::test::ring(3, "u v z");
    auto I = ideal(R, {"u*v", "u*z", "v*z"});
    CHECK(colon(I, poly(R, "u")).same_as(ideal(R, {"v", "z"})));
    CHECK(colon(I, poly(R, "u + v + z")).same_as(I));
    auto S = fsing::test::ring(5, "x y");
    CHECK(colon(ideal(S, {"x^2", "x*y"}), poly(S, "x")).same_as(ideal(S, {"x", "y"})));
    CHECK(colon(ideal(S, {"x^3"}), ideal(S, {"x", "y"})).same_as(ideal(S, {"x^3"})));
}

TEST_CASE("intersection examples") {
    auto S = fsing::test::ring(3, "x y");
    auto J = intersect(ideal(S, {"x"}), ideal(S, {"y"}));
    CHECK(J.same_as(ideal(S, {"x*y"})));
    auto K = intersect(ideal(S, {"x^2", "y"}), ideal(S, {"x", "y^2"}));
    CHECK(K.same_as(ideal(S, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("bracket powers") {
    auto R = fsing::test::ring(2, "u v z");
    auto I = ideal(R, {"u*v", "u + z"});
    CHECK(bracket_power(I, 1).same_as(ideal(R, {"u^2*v^2", "u^2 + z^2"})));
    // composition: (I^[p])^[p] = I^[p^2]
    CHECK(bracket_power(bracket_power(I, 1), 1).same_as(bracket_power(I, 2)));
    CHECK_THROWS_AS(bracket_power(I, 40), ExponentOverflow);
}

TEST_CASE("hilbert function and krull dimension") {
    auto R = fsing::test::ring(3, "u v z");
    auto I = ideal(R, {"u*v", "u*z", "v*z"});
    CHECK(hilbert_sample(I, 0, 2) == std::vector<std::int64_t>{1, 3, 3});
    CHECK(krull_dim(I) == 1);
    CHECK(hilbert_sample(Ideal::zero(fsing::test::ring(3, "x y")), 0, 2) ==
          std::vector<std::int64_t>{1, 2, 3});
    auto T = fsing::test::ring(5, "a b c d");
    CHECK(krull_dim(ideal(T, {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"})) == 2);
    CHECK(krull_dim(ideal(T, {"a*d - b*c"})) == 3);
    CHECK_THROWS_AS(krull_dim(ideal(T, {"1"})), UnitIdeal);
}

TEST_CASE("membership agrees with linear algebra on random ideals") {
    std::mt19937 rng(2024);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = fsing::test::ring(p, "x y z");
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(fsing::test::random_homogeneous(R, 2, 3, rng));
            Ideal I(R, gens);
            for (int q = 0; q < 6; ++q) {
                Polynomial f = fsing::test::random_homogeneous(R, 3, 4, rng);
                if (q % 2 == 0 && !gens.empty() && !gens[0].is_zero())
                    f = gens[0] * fsing::test::random_homogeneous(R, 1, 2, rng) + (q == 0 ? f : Polynomial(R));
                if (f.is_zero()) continue;
                CHECK(I.contains(f) == in_span_bruteforce(I, f, 3));
            }
        }
    }
}

TEST_CASE("reduced groebner basis is invariant under generator shuffles") {
    std::mt19937 rng(99);
    auto R = fsing::test::ring(3, "x:1 y:2 z:1");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 4; ++k) gens.push_back(fsing::test::random_homogeneous(R, 2 + k % 2, 3, rng));
        auto base = strings(Ideal(R, gens).reduced_groebner());
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(strings(Ideal(R, gens).reduced_groebner()) == base);
    }
}

TEST_CASE("colon by a monomial matches the monomial oracle") {
    // For monomial ideals (m_i) : x^a = (m_i / gcd(m_i, x^a)).
    std::mt19937 rng(5);
    auto R = fsing::test::ring(2, "x y z w");
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        std::vector<Monomial> mons;
        for (int k = 0; k < 3; ++k) {
            Monomial m;
            for (int i = 0; i < 4; ++i) m.e[i] = rng() % 3;
            if (m.is_one()) m.e[0] = 1;
            mons.push_back(m);
            gens.push_back(Polynomial::monomial(R, m));
        }
        Monomial g;
        for (int i = 0; i < 4; ++i) g.e[i] = rng() % 3;
        std::vector<Polynomial> expect;
        for (const auto& m : mons) {
            Monomial q;
            for (int i = 0; i < 4; ++i) q.e[i] = std::max(0, m.e[i] - g.e[i]);
            expect.push_back(Polynomial::monomial(R, q));
        }
        Ideal I(R, gens);
        Ideal E(R, expect);
        CHECK(colon(I, Polynomial::monomial(R, g)).same_as(E));
    }
}

TEST_CASE("tracked basis lifts and syzygies") {
    auto R = fsing::test::ring(5, "x y z");
    FreeModule F(R, {0});
    std::vector<Vector> gens = {F.single(0, poly(R, "x*y")), F.single(0, poly(R, "y*z")),
                                F.single(0, poly(R, "x*z"))};
    TrackedBasis T(F, gens);
    auto c = T.lift(F.single(0, poly(R, "x*y*z + 2*x^2*z")));
    REQUIRE(c.has_value());
    Vector back;
    for (std::size_t i = 0; i < gens.size(); ++i)
        back = F.add(back, F.times_poly(gens[i], T.coefficient_module().component(*c, i)));
    CHECK(back == F.single(0, poly(R, "x*y*z + 2*x^2*z")));
    CHECK_FALSE(T.lift(F.single(0, poly(R, "x^2"))).has_value());
    auto S = T.syzygies();
    CHECK(S.size() == 2);
    for (const auto& s : S) {
        Vector sum;
        for (std::size_t i = 0; i < gens.size(); ++i)
            sum = F.add(sum, F.times_poly(gens[i], T.coefficient_module().component(s, i)));
        CHECK(sum.is_zero());
    }
}
