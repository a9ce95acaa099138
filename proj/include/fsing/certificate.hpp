#pragma once

#include <compare>
#include <string>
#include <vector>

namespace fsing {

enum class Tri { False, True, Unknown };

std::string to_string(Tri t);
Tri tri(bool b);
Tri tri_and(Tri a, Tri b);

struct Verdict {
    Tri status = Tri::Unknown;
    std::string witness;  // empty when there is nothing to show
};

/// Who a fact is about: the ring R = A/I, the quotient R/(x), or the element x of R.
enum class Subject { Ring, Quotient, Element };

enum class Property {
    FPure,
    FInjective,
    FFull,
    StronglyFInjective,
    FAntiNilpotent,
    CohenMacaulay,
    GeneralizedCM,
    Surjective,             // element
    StrictlyFilterRegular,  // element
    DepthEqualsFm,
    TwistedInjective,         // x^(p-1) F injective on every H^i
    TwistedInjectiveAtDepth,  // x^(p-1) F injective on H^t, t = depth
};

struct Fact {
    Subject subject = Subject::Ring;
    Property property = Property::FInjective;
    auto operator<=>(const Fact&) const = default;
};

std::string to_string(const Fact& f);
/// Identifier used in reports and on the command line, e.g. "F-anti-nilpotent".
std::string property_name(Property p);
/// Accepts the names produced by property_name plus short aliases; throws InputError.
Property parse_property(const std::string& name);

struct Rule {
    std::string id;
    std::string statement;
    std::vector<Fact> premises;
    std::vector<Fact> conclusions;
};

/// R1..R10 together with the structural implications A1..A4, instantiated per subject.
const std::vector<Rule>& inference_rules();

struct Premise {
    Fact fact;
    Tri verdict = Tri::Unknown;
    std::string source;   // "computed" or the id of the rule that certified it
    std::string witness;
};

struct Step {
    std::string rule;
    std::string statement;
    std::vector<Premise> premises;
    std::vector<Fact> conclusions;
};

struct DeformationCertificate {
    Fact target;
    bool proved = false;
    std::string element;           // x, printed
    std::vector<Step> chain;       // premises before use
    std::vector<Premise> evaluated;  // every computed premise, proved or not
};

}  // namespace fsing
