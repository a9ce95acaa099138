#pragma once

#include "fsing/resolution.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>

namespace fsing {

/// tau(x^b) = x^((b - (p-1)) / p) when every b_i = p-1 mod p, else 0; extended additively.
Polynomial trace(const Polynomial& f);
/// Coordinatewise trace from Hom(F(F), A) back to Hom(F, A).
Vector trace(const FreeModule& target, const Vector& v);

/// Resolution data of A/I shared by the Frobenius computations on every Ext^j:
/// F_., its Frobenius twist G_. = F(F_.) resolving A/I^[p], and a lift G_. -> F_.
/// of the surjection A/I^[p] -> A/I.
class ExtFrobenius {
public:
    explicit ExtFrobenius(Ideal I);

    const Ideal& ideal() const noexcept { return I_; }
    int n() const noexcept { return I_.ring()->n(); }
    const FreeResolution& resolution() const noexcept { return res_; }
    const FreeResolution& twisted() const noexcept { return twisted_; }
    const ChainMap& lift() const noexcept { return lift_; }

    /// N = Ext^j_A(A/I, A).
    const Subquotient& ext(int j) const;
    /// phi_j^T : F_j^* -> G_j^*.
    const std::vector<Vector>& dual_lift(int j) const;
    /// The comparison map Ext^j(A/I) -> Ext^j(A/I^[p]) on cocycles.
    Vector delta_cocycle(int j, const Vector& z) const;
    /// Generators of ker(delta) on Ext^j in Ext^j coordinates, nonzero modulo relations.
    /// Empty iff delta is injective.
    std::vector<Vector> delta_kernel(int j) const;

private:
    Ideal I_;
    FreeResolution res_, twisted_;
    ChainMap lift_;
    struct Slot {
        std::optional<Subquotient> ext;
        std::optional<std::vector<Vector>> dual;
    };
    std::shared_ptr<std::vector<Slot>> slots_;
};

/// The p^-1-linear operator v -> Theta(r v) on N = Ext^j(A/I, A), dual to r F on H^{n-j}_m(A/I).
class CartierOperator {
public:
    using Key = std::pair<std::size_t, std::array<std::int32_t, kMaxVars>>;

    CartierOperator(std::shared_ptr<const ExtFrobenius> data, int j, Polynomial r);
    CartierOperator(std::shared_ptr<const ExtFrobenius> data, int j);

    int j() const noexcept { return j_; }
    const Presentation& module() const { return data_->ext(j_).module(); }
    const FreeModule& free() const { return module().free(); }
    const Polynomial& multiplier() const noexcept { return r_; }

    /// Theta(x^c u_s) keyed by (s, c) with 0 <= c_i < p; zero values are not stored.
    const std::map<Key, Vector>& table() const noexcept { return table_; }
    /// Theta of an element of N given in generator coordinates (not reduced).
    Vector apply(const Vector& a) const;
    /// Degree of Theta(v) for homogeneous v of degree e, if integral.
    std::optional<std::int64_t> image_degree(std::int64_t e) const;

private:
    std::shared_ptr<const ExtFrobenius> data_;
    int j_;
    Polynomial r_;
    std::map<Key, Vector> table_;
};

/// Generators of Theta(W) for the submodule W of N with the given generators.
std::vector<Vector> theta_image(const CartierOperator& T, const std::vector<Vector>& W);
/// Theta(N).
std::vector<Vector> theta_image(const CartierOperator& T);
/// span(B) is contained in span(A) + relations of N.
bool submodule_contains(const Presentation& N, const std::vector<Vector>& A, const std::vector<Vector>& B);

struct HslResult {
    int index = 0;              // first e with Theta^{e+1}(N) = Theta^e(N)
    std::vector<Vector> image;  // generators of the stable image
    bool nilpotent = false;     // stable image is zero
};
/// Iterates N, Theta(N), Theta^2(N), ... Throws CapExceeded after `cap` steps.
HslResult hsl_iterate(const CartierOperator& T, int cap = 30);

/// Number of random pairs (f, v) with Theta(f^p v) != f Theta(v) in N.
std::size_t semilinearity_violations(const CartierOperator& T, std::uint64_t seed, std::size_t pairs);

}  // namespace fsing
