#include "fsing/prime_field.hpp"

#include "fsing/errors.hpp"

#include <string>

namespace fsing {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 30) || !is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not a supported prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1 % p_;
    Coeff b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Coeff PrimeField::inv(Coeff a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse("0 has no inverse mod " + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Coeff>(t);
}

Coeff field_inv(Coeff a, const PrimeField& F) { return F.inv(a); }

}  // namespace fsing
