#include "fsing/polynomial.hpp"

#include "fsing/errors.hpp"

#include <algorithm>

namespace fsing {

namespace {

bool greater(const PolyRing& R, const Term& a, const Term& b) {
    return TermOrder::grevlex().compare(R, a.m, a.deg, b.m, b.deg) > 0;
}

std::vector<Term> merge(const PolyRing& R, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    const auto& F = R.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = TermOrder::grevlex().compare(R, a[i].m, a[i].deg, b[j].m, b[j].deg);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            Term t = b[j++];
            if (subtract) t.c = F.neg(t.c);
            out.push_back(t);
        } else {
            Coeff s = subtract ? F.sub(a[i].c, b[j].c) : F.add(a[i].c, b[j].c);
            if (s) out.push_back({a[i].m, a[i].deg, s});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Polynomial f(ring);
    Coeff v = ring->field().from_int(c);
    if (v) f.terms_.push_back({Monomial{}, 0, v});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    Monomial m = ring->variable(i);
    return monomial(ring, m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
    Polynomial f(ring);
    c %= ring->p();
    if (c) f.terms_.push_back({m, ring->degree(m), c});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const PolyRing& R = *ring;
    for (auto& t : terms) t.deg = R.degree(t.m);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return greater(R, a, b); });
    Polynomial f(ring);
    for (const auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().m == t.m) {
            f.terms_.back().c = R.field().add(f.terms_.back().c, t.c);
            if (!f.terms_.back().c) f.terms_.pop_back();
        } else if (t.c % R.p()) {
            f.terms_.push_back({t.m, t.deg, t.c % R.p()});
        }
    }
    return f;
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.deg != terms_.front().deg) return false;
    return true;
}

std::optional<std::int64_t> Polynomial::weighted_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("weighted degree of 0");
    if (!is_homogeneous()) return std::nullopt;
    return terms_.front().deg;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    const RingPtr& r = ring_ ? ring_ : o.ring_;
    Polynomial f(r);
    if (!r) return f;
    f.terms_ = merge(*r, terms_, o.terms_, false);
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    const RingPtr& r = ring_ ? ring_ : o.ring_;
    Polynomial f(r);
    if (!r) return f;
    f.terms_ = merge(*r, terms_, o.terms_, true);
    return f;
}

Polynomial Polynomial::operator-() const {
    Polynomial f(*this);
    for (auto& t : f.terms_) t.c = ring_->field().neg(t.c);
    return f;
}

Polynomial Polynomial::scaled(Coeff c) const {
    Polynomial f(ring_);
    if (!ring_) return f;
    c %= ring_->p();
    if (!c) return f;
    f.terms_ = terms_;
    for (auto& t : f.terms_) t.c = ring_->field().mul(t.c, c);
    return f;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
    Polynomial f(ring_);
    if (!ring_) return f;
    c %= ring_->p();
    if (!c) return f;
    std::int64_t dm = ring_->degree(m);
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_) f.terms_.push_back({t.m * m, t.deg + dm, ring_->field().mul(t.c, c)});
    return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const RingPtr& r = ring_ ? ring_ : o.ring_;
    Polynomial acc(r);
    if (is_zero() || o.is_zero()) return acc;
    const Polynomial& small = size() <= o.size() ? *this : o;
    const Polynomial& big = size() <= o.size() ? o : *this;
    for (const auto& t : small.terms_) acc = acc + big.times_monomial(t.m, t.c);
    return acc;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::frobenius_power(std::int64_t q) const {
    Polynomial f(ring_);
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_) f.terms_.push_back({t.m.scaled(q), t.deg * q, t.c});
    return f;
}

bool Polynomial::operator==(const Polynomial& o) const noexcept {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::int64_t c = ring_->field().to_signed(t.c);
        if (i == 0) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::int64_t a = c < 0 ? -c : c;
        bool one = t.m.is_one();
        if (a != 1 || one) {
            s += std::to_string(a);
            if (!one) s += "*";
        }
        if (!one) s += ring_->monomial_string(t.m);
    }
    return s;
}

}  // namespace fsing
