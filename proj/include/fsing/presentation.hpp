#pragma once

#include "fsing/fp_matrix.hpp"
#include "fsing/groebner.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace fsing {

/// M = coker(relations -> F), F = A^r with generator degrees.
class Presentation {
public:
    Presentation() = default;
    Presentation(FreeModule F, std::vector<Vector> relations);

    const FreeModule& free() const noexcept { return F_; }
    const RingPtr& ring() const noexcept { return F_.ring(); }
    std::size_t rank() const noexcept { return F_.rank(); }
    const std::vector<std::int64_t>& degrees() const noexcept { return F_.basis_degrees(); }
    const std::vector<Vector>& relations() const noexcept { return rel_; }

    const GroebnerBasis& groebner() const;
    Vector reduce(const Vector& v) const { return groebner().reduce(v); }
    bool is_zero(const Vector& v) const { return reduce(v).is_zero(); }
    bool contains(const std::vector<Vector>& vs) const;
    bool is_zero() const;

    /// Standard basis of M_d: pairs (component, monomial) not in the initial module.
    std::vector<std::pair<std::size_t, Monomial>> basis(std::int64_t d) const;
    std::int64_t dim(std::int64_t d) const { return static_cast<std::int64_t>(basis(d).size()); }
    /// Coordinates of a homogeneous v of degree d in basis(d).
    FpVector coordinates(const Vector& v, std::int64_t d) const;

    /// Krull dimension of M; -1 for the zero module.
    int krull_dim() const;
    /// Total length when finite.
    std::optional<std::int64_t> length() const;
    /// Degrees d with M_d != 0 (finite length modules only). Throws PreconditionViolated.
    std::vector<std::int64_t> support_degrees() const;

    /// Frobenius functor: degrees times q = p^e, relation entries raised to q.
    Presentation frobenius(int e) const;

private:
    struct Cache {
        std::once_flag once;
        GroebnerBasis gb;
    };
    FreeModule F_;
    std::vector<Vector> rel_;
    std::shared_ptr<Cache> cache_;
};

/// (span(gens) + modulo) / modulo inside a free module, with its presentation
/// on a minimal subset of gens.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(FreeModule ambient, const std::vector<Vector>& gens, std::vector<Vector> modulo);

    const Presentation& module() const noexcept { return pres_; }
    const FreeModule& ambient() const noexcept { return ambient_; }
    const std::vector<Vector>& generators() const noexcept { return gens_; }
    const std::vector<Vector>& modulo() const noexcept { return modulo_; }

    /// Coordinates (in module().free()) of w in span(generators) + modulo.
    std::optional<Vector> coordinates(const Vector& w) const;
    /// The ambient element represented by coordinates a.
    Vector representative(const Vector& a) const;

private:
    FreeModule ambient_;
    std::vector<Vector> gens_, modulo_;
    Presentation pres_;
    std::shared_ptr<TrackedBasis> tracker_;
};

/// Homogeneous map given by the images of the source generators in target.free().
struct ModuleMap {
    Presentation source, target;
    std::vector<Vector> images;
    std::int64_t shift = 0;

    Vector apply(const Vector& a) const;
    /// Relations map into relations.
    bool well_defined() const;
};

/// sum_i v_i * images[i] for v in a free module whose basis maps to `images` in `target`.
Vector map_apply(const FreeModule& target, const std::vector<Vector>& images, const Vector& v);

/// ker(phi) as a subquotient of the source free module modulo source relations.
/// Set the flag when the target relations are known to form a Gröbner basis.
Subquotient module_kernel(const ModuleMap& phi, bool relations_are_groebner = false);
/// True iff M has finite length; the length is stored when requested.
bool finite_length(const Presentation& M, std::int64_t* length = nullptr);

}  // namespace fsing
