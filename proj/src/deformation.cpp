#include "fsing/deformation.hpp"

#include "fsing/errors.hpp"

#include <set>

namespace fsing {

namespace {

struct Closure {
    std::map<Fact, int> cost;
    std::map<Fact, std::size_t> via;  // rule index; absent for known facts
};

Closure close(const FactTable& known) {
    Closure c;
    for (const auto& [f, p] : known)
        if (p.verdict == Tri::True) c.cost[f] = 0;
    const auto& rules = inference_rules();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < rules.size(); ++k) {
            int total = 1;
            bool ready = true;
            for (const auto& f : rules[k].premises) {
                auto it = c.cost.find(f);
                if (it == c.cost.end()) {
                    ready = false;
                    break;
                }
                total += it->second;
            }
            if (!ready) continue;
            for (const auto& f : rules[k].conclusions) {
                auto it = c.cost.find(f);
                if (it != c.cost.end() && it->second <= total) continue;
                c.cost[f] = total;
                c.via[f] = k;
                changed = true;
            }
        }
    }
    return c;
}

void emit(const Closure& c, const FactTable& known, const Fact& f, std::set<std::size_t>& done,
          std::vector<Step>& out) {
    auto it = c.via.find(f);
    if (it == c.via.end()) return;
    const Rule& rule = inference_rules()[it->second];
    if (done.count(it->second)) return;
    for (const auto& p : rule.premises) emit(c, known, p, done, out);
    if (!done.insert(it->second).second) return;
    Step s{rule.id, rule.statement, {}, rule.conclusions};
    for (const auto& p : rule.premises) {
        auto v = c.via.find(p);
        if (v == c.via.end()) {
            s.premises.push_back(known.at(p));
        } else {
            s.premises.push_back({p, Tri::True, inference_rules()[v->second].id, ""});
        }
    }
    out.push_back(std::move(s));
}

void put(FactTable& t, Subject s, Property p, Tri v, std::string witness = "") {
    t[{s, p}] = {{s, p}, v, "computed", std::move(witness)};
}

void put(FactTable& t, Subject s, Property p, const Verdict& v) { put(t, s, p, v.status, v.witness); }

struct Premises {
    FactTable leaves;
    Verdict quotient_anti_nilpotent;
};

Premises evaluate(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x) {
    const Ideal& I = data->ideal();
    if (!regular_element(I, x)) throw NotRegular(x.to_string() + " is not a regular element");
    Premises out;
    auto& t = out.leaves;
    auto q = classify(I.plus(x));
    put(t, Subject::Quotient, Property::FPure, q.F_pure);
    put(t, Subject::Quotient, Property::FInjective, q.F_injective);
    put(t, Subject::Quotient, Property::FFull, q.F_full);
    put(t, Subject::Quotient, Property::StronglyFInjective, q.strongly_F_injective);
    put(t, Subject::Quotient, Property::CohenMacaulay, tri(q.is_CM),
        "depth " + std::to_string(q.depth) + ", dim " + std::to_string(q.dim));
    put(t, Subject::Quotient, Property::GeneralizedCM, tri(q.is_gCM),
        "f_m " + std::to_string(q.f_m) + ", dim " + std::to_string(q.dim));
    out.quotient_anti_nilpotent = q.F_anti_nilpotent;
    auto witness = [](const ElementVerdict& v) {
        return v.status == Tri::False ? "i=" + std::to_string(v.index) + ": " + v.witness : std::string{};
    };
    Tri s = Tri::Unknown, f = Tri::Unknown;
    std::string ws, wf;
    try {
        auto v = surjective_element(*data, x);
        s = v.status;
        ws = witness(v);
    } catch (const CapError&) {
    }
    try {
        auto v = strictly_filter_regular(*data, x);
        f = v.status;
        wf = witness(v);
    } catch (const CapError&) {
    }
    put(t, Subject::Element, Property::Surjective, s, ws);
    put(t, Subject::Element, Property::StrictlyFilterRegular, f, wf);
    return out;
}

}  // namespace

std::optional<std::vector<Step>> derive(const FactTable& known, const Fact& target) {
    Closure c = close(known);
    if (!c.cost.count(target)) return std::nullopt;
    std::vector<Step> out;
    std::set<std::size_t> done;
    emit(c, known, target, done, out);
    return out;
}

std::vector<Fact> derivable(const FactTable& known) {
    std::vector<Fact> out;
    for (const auto& [f, c] : close(known).cost) out.push_back(f);
    return out;
}

FactTable deformation_premises(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x) {
    return evaluate(data, x).leaves;
}

DeformationCertificate deform_certify(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x,
                                      const Fact& target) {
    if (target.subject == Subject::Quotient) throw InputError("targets are properties of R or of x");
    DeformationCertificate c;
    c.target = target;
    c.element = x.to_string();
    FactTable known = deformation_premises(data, x);
    for (const auto& [f, p] : known) c.evaluated.push_back(p);
    if (auto chain = derive(known, target)) {
        c.proved = true;
        c.chain = std::move(*chain);
    }
    return c;
}

DeformationCertificate deform_certify(const Ideal& I, const Polynomial& x, const Fact& target) {
    return deform_certify(std::make_shared<const ExtFrobenius>(I), x, target);
}

CrosscheckResult consistency_crosscheck(const Ideal& I, const Polynomial& x) {
    auto data = std::make_shared<const ExtFrobenius>(I);
    Premises pre = evaluate(data, x);
    FactTable direct = pre.leaves;
    put(direct, Subject::Quotient, Property::FAntiNilpotent, pre.quotient_anti_nilpotent);
    auto r = classify(data);
    put(direct, Subject::Ring, Property::FPure, r.F_pure);
    put(direct, Subject::Ring, Property::FInjective, r.F_injective);
    put(direct, Subject::Ring, Property::FFull, r.F_full);
    put(direct, Subject::Ring, Property::StronglyFInjective, r.strongly_F_injective);
    put(direct, Subject::Ring, Property::FAntiNilpotent, r.F_anti_nilpotent);
    put(direct, Subject::Ring, Property::CohenMacaulay, tri(r.is_CM));
    put(direct, Subject::Ring, Property::GeneralizedCM, tri(r.is_gCM));
    put(direct, Subject::Ring, Property::DepthEqualsFm, tri(r.depth == r.f_m),
        "depth " + std::to_string(r.depth) + ", f_m " + std::to_string(r.f_m));
    Tri all = Tri::True;
    std::string first_bad;
    for (int i = 0; i <= r.dim; ++i) {
        try {
            if (!twisted_injectivity(data, x, i)) {
                all = Tri::False;
                first_bad = "i=" + std::to_string(i);
                break;
            }
        } catch (const CapError&) {
            all = Tri::Unknown;
        }
    }
    put(direct, Subject::Ring, Property::TwistedInjective, all, first_bad);
    Tri at_depth = Tri::Unknown;
    try {
        at_depth = tri(twisted_injectivity(data, x, r.depth));
    } catch (const CapError&) {
    }
    put(direct, Subject::Ring, Property::TwistedInjectiveAtDepth, at_depth);

    const auto facts = derivable(direct);
    const std::set<Fact> verified(facts.begin(), facts.end());
    CrosscheckResult out;
    for (const auto& rule : inference_rules()) {
        bool fires = true;
        std::string premises;
        for (const auto& f : rule.premises) {
            if (!verified.count(f)) fires = false;
            premises += (premises.empty() ? "" : ", ") + to_string(f);
        }
        if (!fires) continue;
        out.fired.push_back(rule.id + ": " + premises);
        for (const auto& f : rule.conclusions) {
            auto it = direct.find(f);
            if (it != direct.end() && it->second.verdict == Tri::False)
                out.violations.push_back(rule.id + ": " + premises + " hold but " + to_string(f) + " is false" +
                                         (it->second.witness.empty() ? "" : " (" + it->second.witness + ")"));
        }
    }
    return out;
}

}  // namespace fsing
