#pragma once

#include "fsing/ideal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsing {

/// A seeded pair (I, x) with x a regular linear form on A/I.
struct RandomInstance {
    std::uint64_t seed = 0;
    std::string kind;  // "monomial" or "binomial"
    Ideal ideal;
    Polynomial element;
};

/// Monomial or binomial ideal in 3 or 4 standard-graded variables over F_p, p in {2, 3, 5},
/// with a random regular linear form. nullopt when the draw admits no regular form.
std::optional<RandomInstance> random_instance(std::uint64_t seed);

struct MetamorphicTally {
    std::size_t instances = 0;       // drawn pairs (I, x)
    std::size_t with_premises = 0;   // pairs where some deformation rule fired
    std::size_t coherence_checks = 0;
    std::vector<std::string> violations;  // "seed s: ..." for rule and coherence violations
};

/// Cross-checks random instances from `base` on until `target` of them fire a deformation rule
/// or `max_seeds` seeds are used.
MetamorphicTally metamorphic_suite(std::uint64_t base, std::size_t target, std::size_t max_seeds);

}  // namespace fsing
