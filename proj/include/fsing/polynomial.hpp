#pragma once

#include "fsing/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsing {

struct Term {
    Monomial m;
    std::int64_t deg = 0;  // weighted degree of m
    Coeff c = 0;
};

/// Element of F_p[x_1..x_n]. Terms are kept strictly decreasing in weighted grevlex,
/// with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
    /// Builds from unsorted terms, combining duplicates.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& lead() const { return terms_.front(); }

    bool is_homogeneous() const noexcept;
    /// Weighted degree if homogeneous, nullopt otherwise. Throws ZeroPolynomial on 0.
    std::optional<std::int64_t> weighted_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(Coeff c) const;
    Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
    Polynomial pow(std::uint64_t e) const;
    /// Entrywise exponent scaling by q = p^e, i.e. f^q over F_p.
    Polynomial frobenius_power(std::int64_t q) const;

    bool operator==(const Polynomial& o) const noexcept;
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Weighted degree of f, or nullopt when f is not homogeneous.
inline std::optional<std::int64_t> weighted_degree(const Polynomial& f) { return f.weighted_degree(); }

}  // namespace fsing
