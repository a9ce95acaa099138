#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fsing::finlen {

/// F_q, q = p^e, elements encoded as integers whose base-p digits are the
/// coefficients of a polynomial in a root of a fixed irreducible polynomial.
class FiniteField {
public:
    using Elem = std::uint32_t;

    FiniteField(std::uint32_t p, int e);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t q() const noexcept { return q_; }
    static constexpr bool perfect() { return true; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    /// Throws ZeroInverse.
    Elem inv(Elem a) const;
    Elem frob(Elem a) const noexcept { return frob_[a]; }
    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool equal(Elem a, Elem b) const noexcept { return a == b; }

    /// a = sum_k basis_k * r_k^p; over a perfect field the basis is {1}.
    std::vector<Elem> root_expand(Elem a) const { return {root_[a]}; }
    std::size_t root_basis_size() const noexcept { return 1; }

    Elem random(std::mt19937_64& rng) const { return static_cast<Elem>(rng() % q_); }
    std::vector<Elem> elements() const;
    std::string to_string(Elem a) const;

private:
    std::uint32_t p_, q_;
    int e_;
    std::vector<Elem> add_, mul_, neg_, frob_, root_;
};

/// F_p(t) as reduced fractions num/den with monic den. Not perfect: t has no p-th root.
class RationalFunctionField {
public:
    struct Elem {
        std::vector<std::uint32_t> num;  // low degree first, no trailing zeros
        std::vector<std::uint32_t> den;  // monic
        bool operator==(const Elem&) const = default;
    };

    explicit RationalFunctionField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    static constexpr bool perfect() { return false; }

    Elem zero() const { return {{}, {1}}; }
    Elem one() const { return {{1}, {1}}; }
    Elem t() const { return {{0, 1}, {1}}; }
    Elem constant(std::uint32_t c) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const;
    /// Throws ZeroInverse.
    Elem inv(const Elem& a) const;
    Elem frob(const Elem& a) const;
    bool is_zero(const Elem& a) const noexcept { return a.num.empty(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    /// a = sum_{k<p} t^k * r_k^p.
    std::vector<Elem> root_expand(const Elem& a) const;
    std::size_t root_basis_size() const noexcept { return p_; }
    /// t^k, the k-th member of the expansion basis.
    Elem basis(std::size_t k) const;

    Elem random(std::mt19937_64& rng) const;
    std::string to_string(const Elem& a) const;

private:
    using Poly = std::vector<std::uint32_t>;
    Poly padd(const Poly& a, const Poly& b) const;
    Poly pmul(const Poly& a, const Poly& b) const;
    void pdivmod(Poly a, const Poly& b, Poly& q, Poly& r) const;
    Poly pgcd(Poly a, Poly b) const;
    Elem normalize(Poly num, Poly den) const;
    std::uint32_t inv_p(std::uint32_t a) const;

    std::uint32_t p_;
};

}  // namespace fsing::finlen
