#pragma once

#include "fsing/finlen/random_modules.hpp"

#include <cstdint>

namespace fsing::finlen {

struct LabTally {
    std::size_t checked = 0;
    std::size_t discrepancies = 0;
};

/// Every nilpotent action X and compatible F (F X = X^2 F) over F_2 in dimensions 1..max_dim:
/// anti-nilpotent by quotients versus every F-stable submodule being full.
LabTally exhaustive_f2(std::size_t max_dim);

/// Random injective modules over F_q, q in {2, 4, 8, 3, 9, 27}: the quotient by the
/// F-stable closure of a random vector stays injective.
LabTally perfect_quotients(std::size_t count, std::uint64_t seed);

/// F(f, g) = (f^p + t g^p, 0) on F_p(t)^2 is injective, L = F_p(t) e_1 is F-stable,
/// and F on M/L is not injective.
bool nonperfect_counterexample(std::uint32_t p);

}  // namespace fsing::finlen
