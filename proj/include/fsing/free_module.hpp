#pragma once

#include "fsing/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsing {

struct VTerm {
    Monomial m;
    std::int64_t deg = 0;  // weighted degree of m, without the basis shift
    std::uint32_t comp = 0;
    Coeff c = 0;
    bool operator==(const VTerm& o) const noexcept { return m == o.m && comp == o.comp && c == o.c; }
};

/// Element of a graded free module A^r; terms strictly decreasing in the owning
/// FreeModule's order. A polynomial is the rank-1 case.
struct Vector {
    std::vector<VTerm> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    const VTerm& lead() const { return terms.front(); }
    bool operator==(const Vector& o) const noexcept { return terms == o.terms; }
};

/// Graded free module A^r = (+) A e_i with deg e_i = basis_degrees[i].
/// Order is position-over-term: a smaller component index is larger,
/// and within one component the ring's term order decides.
class FreeModule {
public:
    FreeModule() = default;
    FreeModule(RingPtr ring, std::vector<std::int64_t> basis_degrees, TermOrder order = TermOrder::grevlex())
        : ring_(std::move(ring)), degrees_(std::move(basis_degrees)), order_(order) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const PolyRing& R() const noexcept { return *ring_; }
    std::size_t rank() const noexcept { return degrees_.size(); }
    const std::vector<std::int64_t>& basis_degrees() const noexcept { return degrees_; }
    const TermOrder& order() const noexcept { return order_; }

    int compare(const VTerm& a, const VTerm& b) const noexcept {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return order_.compare(*ring_, a.m, a.deg, b.m, b.deg);
    }
    std::int64_t term_degree(const VTerm& t) const noexcept { return t.deg + degrees_[t.comp]; }

    Vector zero() const { return {}; }
    Vector unit(std::size_t i) const;
    Vector single(std::size_t i, const Polynomial& f) const;
    Vector from_polys(const std::vector<Polynomial>& comps) const;
    /// Sorts and combines raw terms.
    Vector canonical(std::vector<VTerm> terms) const;

    Polynomial component(const Vector& v, std::size_t i) const;
    std::vector<Polynomial> components(const Vector& v) const;

    Vector add(const Vector& a, const Vector& b) const;
    Vector sub(const Vector& a, const Vector& b) const;
    /// a - c * m * b
    Vector sub_multiple(const Vector& a, const Vector& b, const Monomial& m, std::int64_t dm, Coeff c) const;
    Vector scale(const Vector& v, Coeff c) const;
    Vector times_monomial(const Vector& v, const Monomial& m, Coeff c = 1) const;
    Vector times_poly(const Vector& v, const Polynomial& f) const;
    Vector monic(const Vector& v) const;

    bool is_homogeneous(const Vector& v) const noexcept;
    /// Degree of a homogeneous nonzero vector.
    std::optional<std::int64_t> degree(const Vector& v) const noexcept;

    std::string to_string(const Vector& v) const;

private:
    RingPtr ring_;
    std::vector<std::int64_t> degrees_;
    TermOrder order_;
};

}  // namespace fsing
