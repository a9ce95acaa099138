#pragma once

#include "fsing/classify.hpp"

#include <map>
#include <optional>

namespace fsing {

using FactTable = std::map<Fact, Premise>;

/// Smallest rule chain deriving `target` from the facts in `known` whose verdict is true.
/// Steps are ordered so that every premise is established before use.
std::optional<std::vector<Step>> derive(const FactTable& known, const Fact& target);
/// Every fact derivable from the true entries of `known` (including those entries).
std::vector<Fact> derivable(const FactTable& known);

/// Computed verdicts about R/(x) (via classify on I + (x)) and about x itself.
/// Throws NotRegular.
FactTable deformation_premises(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x);

/// A certificate for `target` (about R or x) built only from premises about R/(x) and x.
/// Unproved certificates still carry the evaluated premises. Throws NotRegular.
DeformationCertificate deform_certify(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x,
                                      const Fact& target);
DeformationCertificate deform_certify(const Ideal& I, const Polynomial& x, const Fact& target);

struct CrosscheckResult {
    std::vector<std::string> fired;       // rules whose premises all verified
    std::vector<std::string> violations;  // conclusions then computed false
};

/// Checks every rule whose premises verify against direct computations on R, R/(x) and x.
/// Unknown verdicts are skipped. Throws NotRegular.
CrosscheckResult consistency_crosscheck(const Ideal& I, const Polynomial& x);

}  // namespace fsing
