#include "fsing/deformation.hpp"
#include "fsing/errors.hpp"
#include "fsing/finlen/lab.hpp"
#include "fsing/fixtures.hpp"
#include "fsing/oracle_check.hpp"

#include <functional>
#include <map>

namespace fsing {

namespace {

struct Bundle {
    FixtureRun run;
    void check(const std::string& name, bool pass, std::string detail = "") {
        run.assertions.push_back({name, pass, std::move(detail)});
    }
    /// Runs f, recording a failed assertion instead of propagating errors.
    void guarded(const std::string& name, const std::function<void()>& f) {
        try {
            f();
        } catch (const Error& e) {
            check(name, false, e.what());
        }
    }
};

std::string ints(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + "]";
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

std::shared_ptr<const ExtFrobenius> load(const std::string& file, RingInput& in) {
    in = parse_input(bundled_file(file).text);
    return std::make_shared<const ExtFrobenius>(in.ideal);
}

void oracle(Bundle& b, const std::shared_ptr<const ExtFrobenius>& data, int i, std::int64_t lo, std::int64_t hi) {
    b.guarded("H^" + std::to_string(i) + " agrees with the Koszul oracle", [&] {
        auto c = oracle_check(data, i, lo, hi);
        b.check("H^" + std::to_string(i) + " agrees with the Koszul oracle", c.agree(),
                "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "], stage " + std::to_string(c.stage));
    });
}

void coherence(Bundle& b, const ClassificationReport& r) {
    auto v = coherence_violations(r);
    b.check("report coherence", v.empty(), join(v));
}

void semigroup(Bundle& b) {
    RingInput in;
    auto data = load("semigroup.fring", in);
    auto r = classify(data);
    auto [lo, hi] = support_window(*data, 1);
    auto H = materialize_H(data, 1, lo, hi);
    b.check("dim H^1 = 1", H.total() == 1, "total " + std::to_string(H.total()));
    std::vector<std::int64_t> degs;
    bool zero = true;
    for (std::int64_t d = lo; d <= hi; ++d) {
        if (H.dim(d) == 0) continue;
        degs.push_back(d);
        if (!H.frobenius_at(d).is_zero()) zero = false;
    }
    b.check("H^1 sits in a single positive degree", degs.size() == 1 && degs[0] > 0, "degrees " + ints(degs));
    b.check("Frobenius is zero on H^1", zero);
    b.check("not F-full", r.F_full.status == Tri::False && r.F_full.witness.rfind("i=1", 0) == 0, r.F_full.witness);
    b.check("not F-injective", r.F_injective.status == Tri::False, r.F_injective.witness);
    b.check("depth = 1", r.depth == 1);
    b.check("dim = 2", r.dim == 2);
    b.check("f_m = 2", r.f_m == 2, "H^1 has finite length");
    b.check("generalized Cohen-Macaulay", r.is_gCM);
    oracle(b, data, 1, lo, hi);
    coherence(b, r);
}

void segre_p2(Bundle& b) {
    RingInput in;
    auto data = load("segre-p2.fring", in);
    auto H = materialize_H(data, 2, -2, 2);
    b.check("H^2 dimensions on [-2, 2] are [0, 0, 1, 0, 0]", H.dims == std::vector<std::int64_t>{0, 0, 1, 0, 0},
            ints(H.dims));
    b.check("Frobenius is zero on [H^2]_0", H.frobenius_at(0).is_zero());
    oracle(b, data, 2, -2, 2);
    auto r = classify(data);
    b.check("not F-full at i = 2", r.indices.at(2).F_full.status == Tri::False, r.indices.at(2).F_full.witness);
    b.check("not F-full", r.F_full.status == Tri::False);
    b.check("not F-injective", r.F_injective.status == Tri::False);
    b.check("not F-pure", r.F_pure.status == Tri::False);
    coherence(b, r);
}

void segre_p7(Bundle& b) {
    RingInput in;
    auto data = load("segre-p7.fring", in);
    auto H = materialize_H(data, 2, -2, 2);
    b.check("H^2 dimensions on [-2, 2] are [0, 0, 1, 0, 0]", H.dims == std::vector<std::int64_t>{0, 0, 1, 0, 0},
            ints(H.dims));
    b.check("Frobenius is nonzero on [H^2]_0", !H.frobenius_at(0).is_zero());
    bool injective = true;
    for (int j = 0; j <= data->n(); ++j)
        if (!theta_surjective(CartierOperator(data, j))) injective = false;
    b.check("F-injective", injective);
    auto f = fedder_test(in.ideal);
    b.check("F-pure", f.pure, f.witness ? "Fedder witness of degree " + std::to_string(*f.witness->weighted_degree()) : "");
    oracle(b, data, 2, -2, 2);
    auto r = classify(data);
    b.check("F-full", r.F_full.status == Tri::True);
    b.check("F-anti-nilpotent via R9", r.F_anti_nilpotent.status == Tri::True && r.anti_nilpotent_certificate &&
                                           r.anti_nilpotent_certificate->chain.front().rule == "R9");
    coherence(b, r);
}

void fedder_singh(Bundle& b) {
    RingInput in;
    auto data = load("fedder-singh.fring", in);
    const Polynomial& y = in.element("y");
    b.check("y is a regular element", regular_element(in.ideal, y));
    auto q = fedder_test(in.ideal.plus(y));
    b.check("R/(y) is F-pure", q.pure, q.witness ? q.witness->to_string() : "");
    b.check("R is not F-pure", !fedder_test(in.ideal).pure);
    auto c = deform_certify(data, y, {Subject::Ring, Property::FAntiNilpotent});
    std::vector<std::string> ids;
    for (const auto& s : c.chain) ids.push_back(s.rule);
    b.check("deformation chain [R9; R1] certifies F-anti-nilpotent", c.proved && ids == std::vector<std::string>{"R9", "R1"},
            join(ids));
    auto r = classify(data, {.elements = {{"y", y}}});
    b.check("F-full", r.F_full.status == Tri::True);
    b.check("F-injective", r.F_injective.status == Tri::True);
    b.check("F-anti-nilpotent in the report", r.F_anti_nilpotent.status == Tri::True, r.F_anti_nilpotent.witness);
    b.check("depth R = f_m(R)", r.depth == r.f_m, std::to_string(r.depth) + " = " + std::to_string(r.f_m));
    bool twisted = true;
    for (int i = 0; i <= r.dim; ++i)
        if (!twisted_injectivity(data, y, i)) twisted = false;
    b.check("y^(p-1)F is injective on every H^i", twisted);
    auto x = consistency_crosscheck(in.ideal, y);
    b.check("no rule violations", x.violations.empty(), join(x.violations));
    coherence(b, r);
}

void stanley_reisner(Bundle& b) {
    for (int p : {2, 3, 5}) {
        const std::string tag = " (p = " + std::to_string(p) + ")";
        RingInput in;
        auto data = load("stanley-reisner-p" + std::to_string(p) + ".fring", in);
        auto r = classify(data);
        if (p == 2) b.check("Fedder witness u*v*z" + tag, r.F_pure.witness == "u*v*z", r.F_pure.witness);
        b.check("F-pure" + tag, r.F_pure.status == Tri::True, r.F_pure.witness);
        const bool r9 = r.anti_nilpotent_certificate && r.anti_nilpotent_certificate->chain.size() == 1 &&
                        r.anti_nilpotent_certificate->chain[0].rule == "R9";
        b.check("F-anti-nilpotent via R9" + tag, r.F_anti_nilpotent.status == Tri::True && r9);
        b.check("F-injective" + tag, r.F_injective.status == Tri::True);
        b.check("F-full" + tag, r.F_full.status == Tri::True);
        b.check("Cohen-Macaulay with depth = dim = 1" + tag, r.is_CM && r.depth == 1 && r.dim == 1);
        auto H = materialize_H(data, 1, -3, 3);
        oracle(b, data, 1, std::min<std::int64_t>(-3, H.socle_degrees.front()), 3);
        coherence(b, r);
    }
}

void nonperfect(Bundle& b) {
    using namespace finlen;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const std::string tag = " (p = " + std::to_string(p) + ")";
        RationalFunctionField K(p);
        FinLenModule<RationalFunctionField> M{K, 2, {}, {{K.one(), K.zero()}, {K.t(), K.zero()}}};
        Subspace<RationalFunctionField> L(K, 2);
        L.add(M.unit(0));
        b.check("F(f, g) = (f^p + t g^p, 0) is injective" + tag, frobenius_injective(M));
        b.check("L = k e_1 is F-stable" + tag, fstable_closure(M, L.basis()) == L);
        b.check("F on M/L is not injective" + tag, !stable_quotient_injective(M, L));
    }
    auto t = perfect_quotients(50, 5);
    b.check("quotients stay injective over finite fields", t.discrepancies == 0,
            std::to_string(t.discrepancies) + " failures in " + std::to_string(t.checked));
}

const std::map<std::string, std::function<void(Bundle&)>>& bundles() {
    static const std::map<std::string, std::function<void(Bundle&)>> m{
        {"ex-fedder-singh", fedder_singh}, {"ex-nonperfect", nonperfect},       {"ex-segre-p2", segre_p2},
        {"ex-segre-p7", segre_p7},         {"ex-semigroup", semigroup},         {"ex-stanley-reisner", stanley_reisner},
    };
    return m;
}

}  // namespace

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, f] : bundles()) ids.push_back(id);
    return ids;
}

bool fixture_is_slow(const std::string& id) { return id == "ex-segre-p7"; }

FixtureRun reproduce(const std::string& id) {
    auto it = bundles().find(id);
    if (it == bundles().end()) throw UnknownFixture("no fixture '" + id + "'");
    Bundle b;
    b.run.id = id;
    b.guarded("fixture ran to completion", [&] { it->second(b); });
    return b.run;
}

}  // namespace fsing
