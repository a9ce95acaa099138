#pragma once

#include "fsing/free_module.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fsing {

struct GbOptions {
    /// Maximum number of S-pairs reduced before PairCapExceeded is thrown.
    std::size_t pair_cap = 200000;
    /// The base generators already form a Gröbner basis: their mutual S-pairs are skipped.
    bool base_is_groebner = false;
    /// Stop after this degree: the result is a Gröbner basis in degrees up to it.
    std::optional<std::int64_t> max_degree;
};

GbOptions default_gb_options();
/// Process-wide default used when no options are passed (the CLI sets this once).
void set_default_pair_cap(std::size_t cap);

/// A reduced Gröbner basis of a homogeneous submodule of a free module.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(FreeModule F, std::vector<Vector> elements);

    const FreeModule& module() const noexcept { return F_; }
    const std::vector<Vector>& elements() const noexcept { return G_; }
    std::size_t size() const noexcept { return G_.size(); }

    /// Index of a basis element whose lead term divides t.
    std::optional<std::size_t> find_reducer(const VTerm& t) const noexcept;
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const { return reduce(v).is_zero(); }

    struct Division {
        Vector remainder;
        std::vector<Polynomial> quotients;  // one per basis element
    };
    /// v = sum q_i g_i + remainder, no remainder term divisible by a lead term.
    Division divide(const Vector& v) const;

    /// Lead monomials of basis elements living in component c.
    std::vector<Monomial> lead_monomials(std::size_t c) const;

private:
    FreeModule F_;
    std::vector<Vector> G_;
    std::vector<std::vector<std::size_t>> by_comp_;
    std::vector<std::uint64_t> masks_;
};

struct GbComputation {
    GroebnerBasis basis;
    /// Indices of candidates that were not already in the span of the base
    /// generators and earlier candidates: a minimal generating set modulo the base.
    std::vector<std::size_t> kept_candidates;
    std::size_t pairs_reduced = 0;
};

/// Homogeneous Buchberger with the normal selection strategy. Base generators
/// are processed before candidates of the same degree. Throws PairCapExceeded.
GbComputation compute_groebner(const FreeModule& F, const std::vector<Vector>& base,
                               const std::vector<Vector>& candidates, const GbOptions& opt);
GbComputation compute_groebner(const FreeModule& F, const std::vector<Vector>& base,
                               const std::vector<Vector>& candidates);
GroebnerBasis groebner(const FreeModule& F, const std::vector<Vector>& gens);

/// Subset of gens forming a minimal generating set of (gens + modulo)/modulo.
std::vector<Vector> minimal_generators(const FreeModule& F, const std::vector<Vector>& gens,
                                       const std::vector<Vector>& modulo = {});

/// Gröbner basis of the graph {(g_i, e_i)}; answers lifting and syzygy queries.
class TrackedBasis {
public:
    /// `degrees` overrides the generator degrees (needed when some g_i is zero).
    /// Lifts and syzygies are taken modulo the untracked submodule `modulo`.
    TrackedBasis(const FreeModule& F, std::vector<Vector> gens, std::vector<std::int64_t> degrees = {},
                 const std::vector<Vector>& modulo = {}, bool modulo_is_groebner = false,
                 std::optional<std::int64_t> max_degree = std::nullopt);

    const FreeModule& module() const noexcept { return F_; }
    /// Free module A^m with basis degrees deg(g_i): the home of coefficient vectors.
    const FreeModule& coefficient_module() const noexcept { return coeffs_; }
    const std::vector<Vector>& generators() const noexcept { return gens_; }

    /// Coefficients c with v = sum c_i g_i, or nullopt when v is outside the span.
    std::optional<Vector> lift(const Vector& v) const;
    /// Generators of the syzygy module of the g_i, in coefficient_module().
    /// With a degree cap, generators of its part in degrees up to the cap.
    std::vector<Vector> syzygies() const;

private:
    FreeModule F_, ext_, coeffs_;
    std::vector<Vector> gens_;
    GroebnerBasis gb_;
};

std::vector<Vector> syzygies(const FreeModule& F, const std::vector<Vector>& gens,
                             std::vector<std::int64_t> degrees = {});

}  // namespace fsing
