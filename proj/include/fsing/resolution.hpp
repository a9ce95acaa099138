#pragma once

#include "fsing/ideal.hpp"
#include "fsing/presentation.hpp"

#include <memory>
#include <vector>

namespace fsing {

/// 0 <- F_0 <- F_1 <- ... <- F_L with d_k given by the images of the basis of F_k.
class FreeResolution {
public:
    FreeResolution() = default;
    FreeResolution(std::vector<FreeModule> modules, std::vector<std::vector<Vector>> maps, bool complete);

    std::size_t length() const noexcept { return modules_.size() - 1; }
    const FreeModule& module(std::size_t k) const { return modules_[k]; }
    /// Images of the basis of F_k in F_{k-1}; empty for k = 0.
    const std::vector<Vector>& map(std::size_t k) const { return maps_[k]; }
    bool complete() const noexcept { return complete_; }
    std::vector<std::size_t> betti() const;
    /// No differential has a nonzero constant entry.
    bool is_minimal() const;
    /// d_{k-1} o d_k = 0 for every k.
    bool squares_to_zero() const;

    /// Lifting data for d_k (built on first use).
    const TrackedBasis& tracker(std::size_t k) const;
    /// Entrywise q-th powers; resolves A/I^[q] when this resolves A/I.
    FreeResolution frobenius(int e) const;

private:
    std::vector<FreeModule> modules_;
    std::vector<std::vector<Vector>> maps_;
    bool complete_ = true;
    std::shared_ptr<std::vector<std::unique_ptr<TrackedBasis>>> trackers_;
};

/// Minimal graded free resolution of coker(M) on the given generators, truncated at length_cap.
FreeResolution minimal_free_resolution(const Presentation& M, std::size_t length_cap);
FreeResolution resolve_quotient(const Ideal& I);

/// phi_k(e_i) for each basis element of source F_k, as vectors of target F_k.
struct ChainMap {
    std::vector<std::vector<Vector>> maps;
};

/// Lifts phi_0 : source F_0 -> target F_0 (given on basis elements) to a chain map.
/// Throws LiftFailure when some square cannot be completed.
ChainMap chain_lift(const FreeResolution& source, const FreeResolution& target, std::vector<Vector> phi0);

/// Dual free module Hom(F, A): basis degrees negated.
FreeModule dual_module(const FreeModule& F);
/// d_k^T : F_{k-1}^* -> F_k^*, as the images of the dual basis of F_{k-1}.
std::vector<Vector> dual_map(const FreeResolution& res, std::size_t k);
/// phi_k^T : F_k^* -> G_k^*, for a chain map phi : G -> F.
std::vector<Vector> dual_chain_map(const FreeResolution& source, const FreeResolution& target,
                                   const ChainMap& phi, std::size_t k);

/// Ext^j_A(coker, A) as cocycles of the dual complex modulo coboundaries.
Subquotient ext_module(const FreeResolution& res, std::size_t j);
std::vector<Subquotient> ext_modules(const FreeResolution& res, int n);

std::size_t projective_dimension(const FreeResolution& res);
/// depth A/I = n - pd(A/I). Throws UnitIdeal.
int depth_via_AB(const Ideal& I);

}  // namespace fsing
