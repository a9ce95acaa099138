#pragma once

#include <cstdint>

namespace fsing {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p. Elements are plain integers in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;
    /// Throws ZeroInverse for a == 0.
    Coeff inv(Coeff a) const;
    Coeff from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t to_signed(Coeff a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// Inverse of a modulo the characteristic of F.
Coeff field_inv(Coeff a, const PrimeField& F);

}  // namespace fsing
