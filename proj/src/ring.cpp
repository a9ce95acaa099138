#include "fsing/ring.hpp"

#include "fsing/errors.hpp"

#include <limits>

namespace fsing {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        std::int64_t s = static_cast<std::int64_t>(e[i]) + o.e[i];
        if (s > std::numeric_limits<std::int32_t>::max()) throw ExponentOverflow("monomial product");
        r.e[i] = static_cast<std::int32_t>(s);
    }
    return r;
}

Monomial Monomial::scaled(std::int64_t q) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        std::int64_t s = static_cast<std::int64_t>(e[i]) * q;
        if (s > std::numeric_limits<std::int32_t>::max()) throw ExponentOverflow("bracket power exponent");
        r.e[i] = static_cast<std::int32_t>(s);
    }
    return r;
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<std::int64_t> weights)
    : field_(p), names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.empty()) throw InputError("polynomial ring needs at least one variable");
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
        throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
    if (weights_.size() != names_.size()) throw InputError("weight count does not match variable count");
    for (auto w : weights_) {
        if (w < 1) throw InputError("variable weights must be positive");
        D_ += w;
    }
}

Monomial PolyRing::variable(int i) const {
    if (i < 0 || i >= n()) throw InputError("variable index out of range");
    Monomial m;
    m.e[i] = 1;
    return m;
}

std::string PolyRing::monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += names_[i];
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

int PolyRing::index_of(const std::string& name) const noexcept {
    for (int i = 0; i < n(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, std::vector<std::int64_t> weights) {
    return std::make_shared<const PolyRing>(p, std::move(names), std::move(weights));
}

namespace {

int grevlex_range(const PolyRing& R, const Monomial& a, const Monomial& b, int lo, int hi) noexcept {
    std::int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += R.weights()[i] * a.e[i];
        db += R.weights()[i] * b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

}  // namespace

int TermOrder::compare(const PolyRing& R, const Monomial& a, std::int64_t da, const Monomial& b,
                       std::int64_t db) const noexcept {
    if (kind == Kind::Grevlex) {
        if (da != db) return da < db ? -1 : 1;
        for (int i = R.n() - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    int c = grevlex_range(R, a, b, 0, block);
    if (c) return c;
    return grevlex_range(R, a, b, block, R.n());
}

}  // namespace fsing
