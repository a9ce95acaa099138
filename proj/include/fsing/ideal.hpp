#pragma once

#include "fsing/groebner.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace fsing {

/// Homogeneous ideal I of A = F_p[x_1..x_n] with a lazily computed reduced Gröbner basis.
class Ideal {
public:
    Ideal() = default;
    /// Throws NonHomogeneous if a generator is not homogeneous.
    Ideal(RingPtr ring, std::vector<Polynomial> gens, TermOrder order = TermOrder::grevlex());

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal maximal(RingPtr ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    const TermOrder& order() const noexcept { return order_; }
    const FreeModule& module() const noexcept { return F_; }

    /// Reduced Gröbner basis (write-once cache, computed on first use).
    const GroebnerBasis& groebner() const;
    std::vector<Polynomial> reduced_groebner() const;
    std::vector<Monomial> lead_monomials() const { return groebner().lead_monomials(0); }

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& J) const;
    bool same_as(const Ideal& J) const { return contains(J) && J.contains(*this); }
    bool is_unit() const;
    bool is_zero() const;

    Ideal plus(const Ideal& J) const;
    Ideal plus(const Polynomial& f) const;
    Ideal with_order(TermOrder order) const { return Ideal(ring_, gens_, order); }

    Vector as_vector(const Polynomial& f) const { return F_.single(0, f); }
    Polynomial as_polynomial(const Vector& v) const { return F_.component(v, 0); }
    std::string to_string() const;

private:
    struct Cache {
        std::once_flag once;
        GroebnerBasis gb;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    TermOrder order_;
    FreeModule F_;
    std::shared_ptr<Cache> cache_;
};

struct NormalForm {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // aligned with the basis passed in
};

/// Division of f by a Gröbner basis G (as polynomials) under `order`.
NormalForm normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       TermOrder order = TermOrder::grevlex());
std::vector<Polynomial> reduced_groebner(const Ideal& I, TermOrder order);

/// (I : J); each (I : g) comes from the first coordinate of syz(g, I).
Ideal colon(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& g);
Ideal intersect(const Ideal& I, const Ideal& J);
/// I^{[p^e]}. Throws ExponentOverflow.
Ideal bracket_power(const Ideal& I, int e);
/// Ideal generated by the Gröbner elements free of the first `front_block` variables.
Ideal eliminate(const Ideal& I, int front_block);

std::vector<Monomial> monomials_of_degree(const PolyRing& R, std::int64_t d);
std::vector<Monomial> standard_monomials(const PolyRing& R, const std::vector<Monomial>& leads, std::int64_t d);
/// dim A/(leads); -1 when the monomial ideal is the unit ideal.
int monomial_ideal_dim(const PolyRing& R, const std::vector<Monomial>& leads);

/// dim_k (A/I)_d for d in [lo, hi].
std::vector<std::int64_t> hilbert_sample(const Ideal& I, std::int64_t lo, std::int64_t hi);
/// Krull dimension of A/I. Throws UnitIdeal.
int krull_dim(const Ideal& I);

}  // namespace fsing
