#include "fsing/certificate.hpp"

#include "fsing/errors.hpp"

#include <array>
#include <utility>

namespace fsing {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

Tri tri(bool b) { return b ? Tri::True : Tri::False; }

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Unknown;
}

namespace {

constexpr std::array<std::pair<Property, const char*>, 12> kNames{{
    {Property::FPure, "F-pure"},
    {Property::FInjective, "F-injective"},
    {Property::FFull, "F-full"},
    {Property::StronglyFInjective, "strongly-F-injective"},
    {Property::FAntiNilpotent, "F-anti-nilpotent"},
    {Property::CohenMacaulay, "Cohen-Macaulay"},
    {Property::GeneralizedCM, "generalized-Cohen-Macaulay"},
    {Property::Surjective, "surjective-element"},
    {Property::StrictlyFilterRegular, "strictly-filter-regular"},
    {Property::DepthEqualsFm, "depth-equals-f_m"},
    {Property::TwistedInjective, "twisted-injective"},
    {Property::TwistedInjectiveAtDepth, "twisted-injective-at-depth"},
}};

}  // namespace

std::string property_name(Property p) {
    for (const auto& [q, name] : kNames)
        if (q == p) return name;
    return "?";
}

Property parse_property(const std::string& name) {
    for (const auto& [q, n] : kNames)
        if (name == n) return q;
    if (name == "anti-nilpotent") return Property::FAntiNilpotent;
    if (name == "full") return Property::FFull;
    if (name == "injective") return Property::FInjective;
    if (name == "strongly-injective") return Property::StronglyFInjective;
    if (name == "surjective") return Property::Surjective;
    throw InputError("unknown property '" + name + "'");
}

std::string to_string(const Fact& f) {
    switch (f.subject) {
        case Subject::Ring: return "R " + property_name(f.property);
        case Subject::Quotient: return "R/(x) " + property_name(f.property);
        default: return "x " + property_name(f.property);
    }
}

const std::vector<Rule>& inference_rules() {
    static const std::vector<Rule> rules = [] {
        using enum Property;
        const Subject R = Subject::Ring, Q = Subject::Quotient, X = Subject::Element;
        std::vector<Rule> r{
            {"R1", "If R/(x) is F-anti-nilpotent, then so is R", {{Q, FAntiNilpotent}}, {{R, FAntiNilpotent}}},
            {"R2", "If R/(x) is F-full, then so is R", {{Q, FFull}}, {{R, FFull}}},
            {"R3", "If R/(x) is strongly F-injective, then so is R", {{Q, StronglyFInjective}},
             {{R, StronglyFInjective}}},
            {"R4", "If R/(x) is F-full and F-injective, then R is F-injective", {{Q, FFull}, {Q, FInjective}},
             {{R, FInjective}}},
            {"R5", "If R/(x) is F-full, then x is a surjective element", {{Q, FFull}}, {{X, Surjective}}},
            {"R6", "If R/(x) is F-injective, then depth R = f_m(R)", {{Q, FInjective}}, {{R, DepthEqualsFm}}},
            {"R7",
             "Over a perfect field, if x is strictly filter regular and R/(x) is F-injective, then x^(p-1)F is "
             "injective on every H^i_m(R); in particular R is F-injective",
             {{X, StrictlyFilterRegular}, {Q, FInjective}},
             {{R, TwistedInjective}, {R, FInjective}}},
            {"R8", "If R/(x) is F-injective and generalized Cohen-Macaulay, then R is F-injective",
             {{Q, FInjective}, {Q, GeneralizedCM}}, {{R, FInjective}}},
            {"R9", "F-pure rings are F-anti-nilpotent", {{Q, FPure}}, {{Q, FAntiNilpotent}}},
            {"R9", "F-pure rings are F-anti-nilpotent", {{R, FPure}}, {{R, FAntiNilpotent}}},
            {"R10", "If R/(x) is F-injective, then x^(p-1)F is injective on H^t_m(R), t = depth R",
             {{Q, FInjective}}, {{R, TwistedInjectiveAtDepth}}},
        };
        for (Subject s : {Q, R}) {
            r.push_back({"A1", "F-anti-nilpotent rings are F-injective and F-full", {{s, FAntiNilpotent}},
                         {{s, FInjective}, {s, FFull}}});
            r.push_back({"A2", "Cohen-Macaulay rings are F-full", {{s, CohenMacaulay}}, {{s, FFull}}});
            r.push_back({"A3", "F-injective and F-full rings are strongly F-injective", {{s, FInjective}, {s, FFull}},
                         {{s, StronglyFInjective}}});
            r.push_back({"A4", "strongly F-injective rings are F-injective and F-full", {{s, StronglyFInjective}},
                         {{s, FInjective}, {s, FFull}}});
        }
        return r;
    }();
    return rules;
}

}  // namespace fsing
