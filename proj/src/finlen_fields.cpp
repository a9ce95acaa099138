#include "fsing/finlen/fields.hpp"

#include "fsing/errors.hpp"
#include "fsing/prime_field.hpp"

#include <algorithm>

namespace fsing::finlen {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits digits(std::uint32_t a, std::uint32_t p, int e) {
    Digits d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
    return d;
}

std::uint32_t encode(const Digits& d, std::uint32_t p) {
    std::uint32_t a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

// remainder of a by the monic polynomial m (both low degree first)
Digits reduce_mod(Digits a, const Digits& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t k = a.size(); k-- > dm;) {
        std::uint32_t c = a[k] % p;
        if (!c) continue;
        for (std::size_t i = 0; i <= dm; ++i) a[k - dm + i] = (a[k - dm + i] + (p - c) * m[i]) % p;
    }
    a.resize(std::min(a.size(), dm));
    a.resize(dm, 0);
    return a;
}

bool irreducible(const Digits& m, std::uint32_t p) {
    const int e = static_cast<int>(m.size()) - 1;
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; d <= e / 2; ++d) {
        std::uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint32_t c = 0; c < count; ++c) {
            Digits f = digits(c, p, d);
            f.push_back(1);
            auto r = reduce_mod(m, f, p);
            if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int e) : p_(p), q_(1), e_(e) {
    if (!is_prime(p)) throw NonPrimeCharacteristic(std::to_string(p));
    for (int i = 0; i < e; ++i) q_ *= p;
    Digits m;
    for (std::uint32_t c = 0;; ++c) {
        m = digits(c, p, e);
        m.push_back(1);
        if (irreducible(m, p)) break;
    }
    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        auto da = digits(a, p, e);
        Digits n(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) n[i] = (p - da[i]) % p;
        neg_[a] = encode(n, p);
        for (std::uint32_t b = 0; b < q_; ++b) {
            auto db = digits(b, p, e);
            Digits s(da.size()), prod(2 * da.size(), 0);
            for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p;
            for (std::size_t i = 0; i < da.size(); ++i)
                for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            add_[a * q_ + b] = encode(s, p);
            mul_[a * q_ + b] = encode(reduce_mod(prod, m, p), p);
        }
    }
    frob_.resize(q_);
    root_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Elem x = 1;
        for (std::uint32_t k = 0; k < p; ++k) x = mul(x, a);
        frob_[a] = x;
        root_[x] = a;
    }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw ZeroInverse("in F_" + std::to_string(q_));
    for (Elem b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw InternalError("no inverse in F_q");
}

std::vector<FiniteField::Elem> FiniteField::elements() const {
    std::vector<Elem> v(q_);
    for (Elem a = 0; a < q_; ++a) v[a] = a;
    return v;
}

std::string FiniteField::to_string(Elem a) const { return std::to_string(a); }

RationalFunctionField::RationalFunctionField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw NonPrimeCharacteristic(std::to_string(p));
}

std::uint32_t RationalFunctionField::inv_p(std::uint32_t a) const { return PrimeField(p_).inv(a); }

RationalFunctionField::Poly RationalFunctionField::padd(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p_;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

RationalFunctionField::Poly RationalFunctionField::pmul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void RationalFunctionField::pdivmod(Poly a, const Poly& b, Poly& q, Poly& r) const {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const std::uint32_t lc = inv_p(b.back());
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lc % p_);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p_ - c} * b[i]) % p_);
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = std::move(a);
}

RationalFunctionField::Poly RationalFunctionField::pgcd(Poly a, Poly b) const {
    while (!b.empty()) {
        Poly q, r;
        pdivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RationalFunctionField::Elem RationalFunctionField::normalize(Poly num, Poly den) const {
    if (den.empty()) throw ZeroInverse("zero denominator in F_p(t)");
    if (num.empty()) return zero();
    Poly g = pgcd(num, den);
    Poly q, r;
    pdivmod(num, g, q, r);
    num = q;
    pdivmod(den, g, q, r);
    den = q;
    std::uint32_t lc = inv_p(den.back());
    for (auto& c : num) c = static_cast<std::uint32_t>(std::uint64_t{c} * lc % p_);
    for (auto& c : den) c = static_cast<std::uint32_t>(std::uint64_t{c} * lc % p_);
    return {num, den};
}

RationalFunctionField::Elem RationalFunctionField::constant(std::uint32_t c) const {
    c %= p_;
    return c ? Elem{{c}, {1}} : zero();
}

RationalFunctionField::Elem RationalFunctionField::add(const Elem& a, const Elem& b) const {
    return normalize(padd(pmul(a.num, b.den), pmul(b.num, a.den)), pmul(a.den, b.den));
}

RationalFunctionField::Elem RationalFunctionField::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.num) c = (p_ - c) % p_;
    return r;
}

RationalFunctionField::Elem RationalFunctionField::mul(const Elem& a, const Elem& b) const {
    return normalize(pmul(a.num, b.num), pmul(a.den, b.den));
}

RationalFunctionField::Elem RationalFunctionField::inv(const Elem& a) const {
    if (a.num.empty()) throw ZeroInverse("in F_p(t)");
    return normalize(a.den, a.num);
}

RationalFunctionField::Elem RationalFunctionField::frob(const Elem& a) const {
    // f(t)^p = f(t^p) over F_p
    auto up = [&](const Poly& f) {
        Poly r(f.empty() ? 0 : (f.size() - 1) * p_ + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) r[i * p_] = f[i];
        return r;
    };
    return {up(a.num), up(a.den)};
}

std::vector<RationalFunctionField::Elem> RationalFunctionField::root_expand(const Elem& a) const {
    // a = num * den^(p-1) / den^p; split the numerator by exponent mod p
    Poly N = a.num;
    for (std::uint32_t k = 1; k < p_; ++k) N = pmul(N, a.den);
    std::vector<Elem> out;
    for (std::uint32_t k = 0; k < p_; ++k) {
        Poly part;
        for (std::size_t i = k; i < N.size(); i += p_) part.push_back(N[i]);
        while (!part.empty() && part.back() == 0) part.pop_back();
        out.push_back(normalize(part, a.den));
    }
    return out;
}

RationalFunctionField::Elem RationalFunctionField::basis(std::size_t k) const {
    Poly t(k + 1, 0);
    t[k] = 1;
    return {t, {1}};
}

RationalFunctionField::Elem RationalFunctionField::random(std::mt19937_64& rng) const {
    Poly num(rng() % 3), den(rng() % 3 + 1);
    for (auto& c : num) c = static_cast<std::uint32_t>(rng() % p_);
    for (auto& c : den) c = static_cast<std::uint32_t>(rng() % p_);
    den.back() = 1;
    while (!num.empty() && num.back() == 0) num.pop_back();
    return normalize(num, den);
}

std::string RationalFunctionField::to_string(const Elem& a) const {
    auto poly = [&](const Poly& f) {
        if (f.empty()) return std::string("0");
        std::string s;
        for (std::size_t i = f.size(); i-- > 0;) {
            if (!f[i]) continue;
            if (!s.empty()) s += " + ";
            if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
            if (i > 0) s += (f[i] != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return s;
    };
    if (a.den.size() == 1) return poly(a.num);
    return "(" + poly(a.num) + ")/(" + poly(a.den) + ")";
}

}  // namespace fsing::finlen
