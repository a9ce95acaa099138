#pragma once

#include "fsing/fp_matrix.hpp"
#include "fsing/ideal.hpp"

#include <cstdint>
#include <vector>

namespace fsing {

/// A homogeneous system of parameters of A/I: variables when some subset works,
/// otherwise seeded random forms. Throws UnitIdeal.
std::vector<Polynomial> system_of_parameters(const Ideal& I, std::uint64_t seed = 1);

struct KoszulOptions {
    std::vector<Polynomial> sop;  // empty: system_of_parameters(I)
    int max_stage = 12;
};

/// H^i_m(A/I)_d as the colimit over t of Koszul cohomology on theta_1^t..theta_k^t,
/// computed degreewise by linear algebra.
struct KoszulResult {
    int i = 0;
    std::int64_t lo = 0, hi = -1;
    int stage = 0;                   // first stage t found stable on the window
    std::vector<std::int64_t> dims;  // index d - lo
    std::vector<FpMatrix> frobenius; // H_d -> H_pd, stage t -> stage tp; 0 x 0 when H_d = 0
    std::vector<Polynomial> sop;

    std::int64_t dim(std::int64_t d) const { return dims.at(static_cast<std::size_t>(d - lo)); }
    const FpMatrix& frobenius_at(std::int64_t d) const { return frobenius.at(static_cast<std::size_t>(d - lo)); }
};

/// Throws NotStabilized when no stage up to max_stage - 2 has two consecutive
/// isomorphic transitions on every degree of the window and on the Frobenius targets of nonzero H_d.
KoszulResult koszul_oracle(const Ideal& I, int i, std::int64_t lo, std::int64_t hi, KoszulOptions opt = {});

/// Map H^i_m(A/I^[p])_d -> H^i_m(A/I)_d induced by the surjection, at a stable stage,
/// for every d in the window; used to cross-check the Ext comparison map.
std::vector<FpMatrix> koszul_comparison(const Ideal& I, int i, std::int64_t lo, std::int64_t hi,
                                        KoszulOptions opt = {});

}  // namespace fsing
