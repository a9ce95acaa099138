#pragma once

#include "fsing/koszul_oracle.hpp"
#include "fsing/local_cohomology.hpp"

#include <utility>

namespace fsing {

struct OracleRow {
    std::int64_t d = 0;
    std::int64_t dim_duality = 0, dim_koszul = 0;
    // ranks of F, F^2, ... starting at degree d while p^k d stays in the window
    std::vector<std::size_t> ranks_duality, ranks_koszul;
    bool agree() const { return dim_duality == dim_koszul && ranks_duality == ranks_koszul; }
};

struct OracleComparison {
    int i = 0;
    std::int64_t lo = 0, hi = -1;
    int stage = 0;
    std::vector<std::int64_t> socle_degrees;
    std::vector<OracleRow> rows;
    bool agree() const;
};

/// Degrees of a finite-length H^i_m(R), widened by `margin` on both sides; [0, 0] when H^i = 0.
/// Throws PreconditionViolated when H^i_m(R) does not have finite length.
std::pair<std::int64_t, std::int64_t> support_window(const ExtFrobenius& data, int i, std::int64_t margin = 1);

/// Compares materialize_H with koszul_oracle degreewise: dimensions and the ranks of iterated
/// Frobenius maps, which do not depend on the chosen bases. The window must contain every socle degree.
OracleComparison oracle_check(const std::shared_ptr<const ExtFrobenius>& data, int i, std::int64_t lo,
                              std::int64_t hi, KoszulOptions opt = {});

}  // namespace fsing
