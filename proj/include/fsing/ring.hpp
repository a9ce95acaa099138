#pragma once

#include "fsing/prime_field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fsing {

inline constexpr int kMaxVars = 12;

/// Dense exponent vector. Unused trailing slots stay zero.
struct Monomial {
    std::array<std::int32_t, kMaxVars> e{};

    bool operator==(const Monomial&) const = default;

    bool divides(const Monomial& o) const noexcept {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool is_one() const noexcept {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    /// Throws ExponentOverflow.
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(o).
    Monomial operator/(const Monomial& o) const noexcept {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const noexcept {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
        return r;
    }
    bool coprime(const Monomial& o) const noexcept {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    /// Every exponent multiplied by q; throws ExponentOverflow.
    Monomial scaled(std::int64_t q) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : m.e) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(v))) * 1099511628211ull;
        return h;
    }
};

/// F_p[x_1..x_n] with positive integer weights. D is the total weight.
class PolyRing {
public:
    PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<std::int64_t> weights);

    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }
    int n() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    std::int64_t total_weight() const noexcept { return D_; }

    std::int64_t degree(const Monomial& m) const noexcept {
        std::int64_t d = 0;
        for (int i = 0; i < n(); ++i) d += weights_[i] * m.e[i];
        return d;
    }
    Monomial variable(int i) const;
    std::string monomial_string(const Monomial& m) const;
    int index_of(const std::string& name) const noexcept;

    bool operator==(const PolyRing& o) const noexcept {
        return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
    }

private:
    PrimeField field_;
    std::vector<std::string> names_;
    std::vector<std::int64_t> weights_;
    std::int64_t D_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, std::vector<std::int64_t> weights);

/// Monomial orders. Grevlex is weighted (degree first, then reverse lex).
/// Elimination(k) compares the first k variables (weighted grevlex) before the rest.
struct TermOrder {
    enum class Kind { Grevlex, Elimination };
    Kind kind = Kind::Grevlex;
    int block = 0;

    static TermOrder grevlex() { return {}; }
    static TermOrder elimination(int front_block) { return {Kind::Elimination, front_block}; }

    /// Negative if a < b, zero if equal, positive if a > b. da/db are weighted degrees.
    int compare(const PolyRing& R, const Monomial& a, std::int64_t da, const Monomial& b, std::int64_t db) const noexcept;

    bool operator==(const TermOrder&) const = default;
};

}  // namespace fsing
