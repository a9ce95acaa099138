#include "doctest.h"
#include "fixtures_util.hpp"
#include "fsing/deformation.hpp"
#include "fsing/errors.hpp"

#include <algorithm>
#include <set>

using namespace fsing;
using fsing::test::ideal;
using fsing::test::poly;
using fsing::test::ring;

namespace {

Polynomial regular_linear_form(const Ideal& I) {
    const auto& R = I.ring();
    std::vector<std::string> candidates;
    for (const auto& v : R->names()) candidates.push_back(v);
    std::string sum;
    for (const auto& v : R->names()) sum += (sum.empty() ? "" : " + ") + v;
    candidates.push_back(sum);
    for (const auto& c : candidates) {
        auto x = poly(R, c);
        if (*x.weighted_degree() == 1 && regular_element(I, x)) return x;
    }
    FAIL("no regular linear form");
    return {};
}

std::vector<std::string> rule_ids(const DeformationCertificate& c) {
    std::vector<std::string> ids;
    for (const auto& s : c.chain) ids.push_back(s.rule);
    return ids;
}

const Premise& premise(const DeformationCertificate& c, Subject s, Property p) {
    for (const auto& e : c.evaluated)
        if (e.fact == Fact{s, p}) return e;
    throw std::runtime_error("premise not evaluated");
}

}  // namespace

TEST_CASE("fedder criterion") {
    auto R = ring(3, "x y");
    auto z = fedder_test(Ideal::zero(R));
    CHECK(z.pure);
    REQUIRE(z.witness);
    CHECK(*z.witness == Polynomial::constant(R, 1));

    auto sr = fedder_test(test::stanley_reisner_ideal(2));
    CHECK(sr.pure);
    REQUIRE(sr.witness);
    CHECK(sr.witness->to_string() == "u*v*z");

    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto S = ring(p, "x");
        CHECK_FALSE(fedder_test(ideal(S, {"x^2"})).pure);
        CHECK(fedder_test(test::stanley_reisner_ideal(p)).pure);
    }
    // the Fedder-Singh ring is not F-pure, its hyperplane section is
    auto fs = test::fedder_singh_ideal();
    CHECK_FALSE(fedder_test(fs).pure);
    CHECK(fedder_test(fs.plus(poly(fs.ring(), "Y"))).pure);
    CHECK_FALSE(fedder_test(test::segre_ideal(2)).pure);
}

TEST_CASE("regular elements") {
    auto fs = test::fedder_singh_ideal();
    CHECK(regular_element(fs, poly(fs.ring(), "Y")));
    CHECK_FALSE(regular_element(fs, poly(fs.ring(), "U")));
    auto sr = test::stanley_reisner_ideal(3);
    CHECK_FALSE(regular_element(sr, poly(sr.ring(), "u")));
    CHECK(regular_element(sr, poly(sr.ring(), "u + v + z")));
    auto R = ring(5, "x y");
    CHECK(regular_element(Ideal::zero(R), poly(R, "x")));
    CHECK(regular_element(Ideal::zero(R), poly(R, "x^2 - 3*y^2")));
    CHECK_THROWS_AS(regular_element(Ideal::zero(R), poly(R, "x + y^2")), PreconditionViolated);
}

TEST_CASE("surjective and strictly filter regular elements") {
    auto R = ring(3, "x y");
    ExtFrobenius poly_ring(Ideal::zero(R));
    CHECK(surjective_element(poly_ring, poly(R, "x")).status == Tri::True);

    auto sg = test::semigroup_ideal();
    ExtFrobenius sgd(sg);
    auto x = regular_linear_form(sg);
    auto s = surjective_element(sgd, x);
    CHECK(s.status == Tri::False);
    CHECK(s.index == 1);
    CHECK_FALSE(s.witness.empty());
    CHECK(strictly_filter_regular(sgd, x).status == Tri::True);

    auto sr = test::stanley_reisner_ideal(3);
    ExtFrobenius srd(sr);
    auto l = poly(sr.ring(), "u + v + z");
    CHECK(surjective_element(srd, l).status == Tri::True);
    CHECK(strictly_filter_regular(srd, l).status == Tri::True);
    CHECK_THROWS_AS(surjective_element(srd, poly(sr.ring(), "u")), NotRegular);

    // (u) meet (v, z): the cokernels on H^1 still have finite length
    auto S = ring(3, "u v z");
    Ideal mixed = intersect(ideal(S, {"u"}), ideal(S, {"v", "z"}));
    ExtFrobenius md(mixed);
    auto y = poly(S, "u + v");
    REQUIRE(regular_element(mixed, y));
    CHECK(strictly_filter_regular(md, y).status == Tri::True);

    // two 3-spaces meeting along a line: H^2 contains H^1 of the line, killed by a + c
    auto T = ring(3, "a b c d e");
    Ideal planes = ideal(T, {"a*c", "a*d", "b*c", "b*d"});
    ExtFrobenius pd(planes);
    auto w = poly(T, "a + c");
    REQUIRE(regular_element(planes, w));
    auto f = strictly_filter_regular(pd, w);
    CHECK(f.status == Tri::False);
    CHECK(f.index == 2);
    CHECK(surjective_element(pd, w).status == Tri::False);
    CHECK(strictly_filter_regular(pd, poly(T, "e")).status == Tri::True);
}

TEST_CASE("surjective elements match injectivity of the maps between powers") {
    auto sg = test::semigroup_ideal();
    auto sr = test::stanley_reisner_ideal(2);
    auto R = ring(3, "x y");
    std::vector<std::pair<Ideal, Polynomial>> cases{{sg, regular_linear_form(sg)},
                                                    {sr, poly(sr.ring(), "u + v + z")},
                                                    {Ideal::zero(R), poly(R, "y")},
                                                    {intersect(ideal(sr.ring(), {"u"}), ideal(sr.ring(), {"v", "z"})),
                                                     poly(sr.ring(), "u + v")}};
    for (const auto& [I, x] : cases) {
        ExtFrobenius d(I);
        const bool surj = surjective_element(d, x).status == Tri::True;
        for (auto [h, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}})
            CHECK(power_map_injective(I, x, h, k) == surj);
    }
}

TEST_CASE("twisted injectivity") {
    auto R = ring(3, "x y");
    auto zero = std::make_shared<const ExtFrobenius>(Ideal::zero(R));
    CHECK(twisted_injectivity(zero, poly(R, "x"), 2));
    auto fs = std::make_shared<const ExtFrobenius>(test::fedder_singh_ideal());
    auto y = poly(fs->ideal().ring(), "Y");
    for (int i = 0; i <= 4; ++i) CHECK(twisted_injectivity(fs, y, i));
    auto sg = std::make_shared<const ExtFrobenius>(test::semigroup_ideal());
    CHECK_FALSE(twisted_injectivity(sg, regular_linear_form(sg->ideal()), 1));
}

TEST_CASE("classify: semigroup ring") {
    auto r = classify(test::semigroup_ideal());
    CHECK(r.dim == 2);
    CHECK(r.depth == 1);
    // H^1 has finite length, so the first non-finitely generated module is H^2
    CHECK(r.f_m == 2);
    CHECK(r.is_gCM);
    CHECK_FALSE(r.is_CM);
    REQUIRE(r.indices.size() == 3);
    CHECK(r.indices[0].vanishes);
    CHECK(r.indices[1].length == 1);
    CHECK(r.indices[1].F_injective.status == Tri::False);
    CHECK(r.indices[1].F_full.status == Tri::False);
    CHECK(r.indices[1].F_nilpotent.status == Tri::True);
    CHECK(r.F_injective.status == Tri::False);
    CHECK(r.F_full.status == Tri::False);
    CHECK(r.F_full.witness.rfind("i=1", 0) == 0);
    CHECK(r.F_pure.status == Tri::False);
    CHECK(r.F_anti_nilpotent.status == Tri::False);
    CHECK(coherence_violations(r).empty());
}

TEST_CASE("classify: Stanley-Reisner ring of three points") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = classify(test::stanley_reisner_ideal(p));
        CHECK(r.F_pure.status == Tri::True);
        CHECK(r.F_anti_nilpotent.status == Tri::True);
        REQUIRE(r.anti_nilpotent_certificate);
        CHECK(rule_ids(*r.anti_nilpotent_certificate) == std::vector<std::string>{"R9"});
        CHECK(r.F_injective.status == Tri::True);
        CHECK(r.F_full.status == Tri::True);
        CHECK(r.strongly_F_injective.status == Tri::True);
        CHECK(r.is_CM);
        CHECK(r.depth == 1);
        CHECK(r.dim == 1);
        CHECK(coherence_violations(r).empty());
    }
}

TEST_CASE("classify: Segre product in characteristic 2") {
    auto r = classify(test::segre_ideal(2));
    CHECK(r.dim == 3);
    CHECK(r.depth == 2);
    CHECK(r.indices[2].length == 1);
    CHECK(r.indices[2].F_full.status == Tri::False);
    CHECK(r.indices[2].F_injective.status == Tri::False);
    CHECK(r.F_full.status == Tri::False);
    CHECK(r.F_injective.status == Tri::False);
    CHECK(coherence_violations(r).empty());
}

TEST_CASE("classify: polynomial rings") {
    for (auto spec : {"x y", "x:2 y:3 z"}) {
        auto R = ring(5, spec);
        auto r = classify(Ideal::zero(R));
        CHECK(r.depth == r.dim);
        CHECK(r.dim == R->n());
        CHECK(r.F_pure.status == Tri::True);
        CHECK(r.F_injective.status == Tri::True);
        CHECK(r.F_full.status == Tri::True);
        CHECK(r.F_anti_nilpotent.status == Tri::True);
        CHECK(coherence_violations(r).empty());
    }
    auto R = ring(3, "x");
    CHECK_THROWS_AS(classify(ideal(R, {"1"})), UnitIdeal);
}

TEST_CASE("deformation certificates") {
    SUBCASE("Fedder-Singh ring along y") {
        auto I = test::fedder_singh_ideal();
        auto y = poly(I.ring(), "Y");
        auto c = deform_certify(I, y, {Subject::Ring, Property::FAntiNilpotent});
        REQUIRE(c.proved);
        CHECK(rule_ids(c) == std::vector<std::string>{"R9", "R1"});
        CHECK(c.chain[0].premises[0].fact == Fact{Subject::Quotient, Property::FPure});
        CHECK(c.chain[0].premises[0].source == "computed");
        CHECK(c.chain[1].premises[0].source == "R9");
        auto r = classify(I, {.elements = {{"y", y}}});
        CHECK(r.F_pure.status == Tri::False);
        CHECK(r.F_anti_nilpotent.status == Tri::True);
        CHECK(r.F_full.status == Tri::True);
        CHECK(r.F_injective.status == Tri::True);
        CHECK(r.depth == r.f_m);
        CHECK(coherence_violations(r).empty());
    }
    SUBCASE("cone over three points with an extra variable") {
        auto R = ring(3, "u v z w");
        auto I = ideal(R, {"u*v", "u*z", "v*z"});
        auto c = deform_certify(I, poly(R, "w"), {Subject::Ring, Property::FFull});
        REQUIRE(c.proved);
        CHECK(rule_ids(c) == std::vector<std::string>{"R2"});
    }
    SUBCASE("semigroup ring cannot be certified F-full") {
        auto I = test::semigroup_ideal();
        auto c = deform_certify(I, regular_linear_form(I), {Subject::Ring, Property::FFull});
        CHECK_FALSE(c.proved);
        CHECK(premise(c, Subject::Quotient, Property::FFull).verdict == Tri::False);
    }
    SUBCASE("Segre product cannot be certified F-full") {
        auto I = test::segre_ideal(2);
        auto c = deform_certify(I, regular_linear_form(I), {Subject::Ring, Property::FFull});
        CHECK_FALSE(c.proved);
    }
    SUBCASE("polynomial ring") {
        auto R = ring(2, "x y z");
        auto c = deform_certify(Ideal::zero(R), poly(R, "x"), {Subject::Ring, Property::FFull});
        REQUIRE(c.proved);
        CHECK(rule_ids(c) == std::vector<std::string>{"R2"});
        auto s = deform_certify(Ideal::zero(R), poly(R, "x"), {Subject::Element, Property::Surjective});
        CHECK(s.proved);
    }
    SUBCASE("not regular") {
        auto I = test::stanley_reisner_ideal(2);
        CHECK_THROWS_AS(deform_certify(I, poly(I.ring(), "u"), {Subject::Ring, Property::FFull}), NotRegular);
    }
}

TEST_CASE("inference engine") {
    FactTable known;
    auto put = [&](Subject s, Property p, Tri t) { known[{s, p}] = {{s, p}, t, "computed", ""}; };
    put(Subject::Quotient, Property::FInjective, Tri::True);
    put(Subject::Quotient, Property::FFull, Tri::False);
    CHECK_FALSE(derive(known, {Subject::Ring, Property::FFull}));
    auto d = derive(known, {Subject::Ring, Property::DepthEqualsFm});
    REQUIRE(d);
    CHECK(d->size() == 1);
    put(Subject::Quotient, Property::FFull, Tri::True);
    auto s = derive(known, {Subject::Ring, Property::StronglyFInjective});
    REQUIRE(s);
    // either R3 after A3, or A3 on R after R2 and R4: both use two steps
    CHECK(s->size() == 2);
    put(Subject::Quotient, Property::FFull, Tri::Unknown);
    CHECK_FALSE(derive(known, {Subject::Ring, Property::FFull}));
    // every premise is established before it is used
    known.clear();
    put(Subject::Quotient, Property::FPure, Tri::True);
    auto a = derive(known, {Subject::Ring, Property::StronglyFInjective});
    REQUIRE(a);
    std::set<Fact> have{{Subject::Quotient, Property::FPure}};
    for (const auto& step : *a) {
        for (const auto& p : step.premises) CHECK(have.count(p.fact));
        for (const auto& c : step.conclusions) have.insert(c);
    }
}

TEST_CASE("consistency cross-check on the fixtures") {
    auto fs = test::fedder_singh_ideal();
    auto a = consistency_crosscheck(fs, poly(fs.ring(), "Y"));
    CHECK(a.violations.empty());
    CHECK(std::any_of(a.fired.begin(), a.fired.end(), [](const std::string& s) { return s.rfind("R1:", 0) == 0; }));
    auto sg = test::semigroup_ideal();
    auto b = consistency_crosscheck(sg, regular_linear_form(sg));
    CHECK(b.violations.empty());
    CHECK(std::none_of(b.fired.begin(), b.fired.end(), [](const std::string& s) { return s.rfind("R2:", 0) == 0; }));
}
