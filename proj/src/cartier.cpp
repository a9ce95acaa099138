#include "fsing/cartier.hpp"

#include "fsing/errors.hpp"

#include <map>
#include <random>
#include <set>

namespace fsing {

namespace {

std::optional<Monomial> trace_monomial(const PolyRing& R, const Monomial& m) {
    const auto p = static_cast<std::int32_t>(R.p());
    Monomial out;
    for (int i = 0; i < R.n(); ++i) {
        if (m.e[i] % p != p - 1) return std::nullopt;
        out.e[i] = (m.e[i] - (p - 1)) / p;
    }
    return out;
}

// Residue class c with x^c * x^b having every exponent = p-1 mod p.
std::array<std::int32_t, kMaxVars> complement_class(const PolyRing& R, const Monomial& b) {
    const auto p = static_cast<std::int32_t>(R.p());
    std::array<std::int32_t, kMaxVars> c{};
    for (int i = 0; i < R.n(); ++i) c[i] = ((p - 1 - b.e[i] % p) % p + p) % p;
    return c;
}

}  // namespace

Polynomial trace(const Polynomial& f) {
    const PolyRing& R = *f.ring();
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (auto m = trace_monomial(R, t.m)) out.push_back({*m, 0, t.c});
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Vector trace(const FreeModule& target, const Vector& v) {
    const PolyRing& R = target.R();
    std::vector<VTerm> out;
    for (const auto& t : v.terms)
        if (auto m = trace_monomial(R, t.m)) out.push_back({*m, R.degree(*m), t.comp, t.c});
    return target.canonical(std::move(out));
}

ExtFrobenius::ExtFrobenius(Ideal I)
    : I_(std::move(I)), res_(resolve_quotient(I_)), twisted_(res_.frobenius(1)),
      slots_(std::make_shared<std::vector<Slot>>(static_cast<std::size_t>(I_.ring()->n()) + 1)) {
    lift_ = chain_lift(twisted_, res_, {res_.module(0).unit(0)});
}

const Subquotient& ExtFrobenius::ext(int j) const {
    auto& s = slots_->at(static_cast<std::size_t>(j));
    if (!s.ext) s.ext = ext_module(res_, static_cast<std::size_t>(j));
    return *s.ext;
}

const std::vector<Vector>& ExtFrobenius::dual_lift(int j) const {
    auto& s = slots_->at(static_cast<std::size_t>(j));
    if (!s.dual) {
        auto k = static_cast<std::size_t>(j);
        s.dual = k <= res_.length() ? dual_chain_map(twisted_, res_, lift_, k) : std::vector<Vector>{};
    }
    return *s.dual;
}

Vector ExtFrobenius::delta_cocycle(int j, const Vector& z) const {
    auto k = static_cast<std::size_t>(j);
    if (k > res_.length()) return {};
    return map_apply(dual_module(twisted_.module(k)), dual_lift(j), z);
}

std::vector<Vector> ExtFrobenius::delta_kernel(int j) const {
    const Subquotient& N = ext(j);
    if (N.generators().empty()) return {};
    auto k = static_cast<std::size_t>(j);
    FreeModule Gs = dual_module(twisted_.module(k));
    // the Frobenius twist of a Gröbner basis of the coboundaries is one for the twisted coboundaries
    std::vector<Vector> BG;
    if (k > 0) {
        const std::int64_t p = I_.ring()->p();
        const GroebnerBasis gb = groebner(N.ambient(), dual_map(res_, k));
        for (const auto& b : gb.elements()) {
            std::vector<VTerm> t;
            for (const auto& x : b.terms) t.push_back({x.m.scaled(static_cast<std::int32_t>(p)), x.deg * p, x.comp, x.c});
            BG.push_back(Gs.canonical(std::move(t)));
        }
    }
    std::vector<Vector> images;
    for (const auto& z : N.generators()) images.push_back(delta_cocycle(j, z));
    ModuleMap delta{N.module(), Presentation(Gs, BG), images, 0};
    return module_kernel(delta, true).generators();
}

CartierOperator::CartierOperator(std::shared_ptr<const ExtFrobenius> data, int j)
    : CartierOperator(data, j, Polynomial::constant(data->ideal().ring(), 1)) {}

CartierOperator::CartierOperator(std::shared_ptr<const ExtFrobenius> data, int j, Polynomial r)
    : data_(std::move(data)), j_(j), r_(std::move(r)) {
    const Subquotient& N = data_->ext(j_);
    if (N.generators().empty()) return;
    const FreeModule& Fj = N.ambient();
    const PolyRing& R = Fj.R();
    FreeModule Gs = dual_module(data_->twisted().module(static_cast<std::size_t>(j_)));
    for (std::size_t s = 0; s < N.generators().size(); ++s) {
        Vector y = Gs.times_poly(data_->delta_cocycle(j_, N.generators()[s]), r_);
        std::map<std::array<std::int32_t, kMaxVars>, std::vector<VTerm>> classes;
        for (const auto& t : y.terms) classes[complement_class(R, t.m)].push_back(t);
        for (auto& [c, terms] : classes) {
            Monomial xc;
            xc.e = c;
            Vector part = Gs.times_monomial(Gs.canonical(std::move(terms)), xc);
            Vector w = trace(Fj, part);
            if (w.is_zero()) continue;
            auto coords = N.coordinates(w);
            if (!coords) throw InternalError("cartier: traced cocycle is not in the Ext module");
            if (!coords->is_zero()) table_.emplace(Key{s, c}, std::move(*coords));
        }
    }
}

Vector CartierOperator::apply(const Vector& a) const {
    const FreeModule& F = free();
    const PolyRing& R = F.R();
    const auto p = static_cast<std::int32_t>(R.p());
    std::vector<VTerm> out;
    for (const auto& t : a.terms) {
        Key key{t.comp, {}};
        Monomial q;
        for (int i = 0; i < R.n(); ++i) {
            key.second[i] = t.m.e[i] % p;
            q.e[i] = t.m.e[i] / p;
        }
        auto it = table_.find(key);
        if (it == table_.end()) continue;
        const std::int64_t dq = R.degree(q);
        for (const auto& s : it->second.terms)
            out.push_back({s.m * q, s.deg + dq, s.comp, R.field().mul(s.c, t.c)});
    }
    return F.canonical(std::move(out));
}

std::optional<std::int64_t> CartierOperator::image_degree(std::int64_t e) const {
    const PolyRing& R = *r_.ring();
    if (r_.is_zero()) return std::nullopt;
    std::int64_t num = e + *weighted_degree(r_) - static_cast<std::int64_t>(R.p() - 1) * R.total_weight();
    if (num % static_cast<std::int64_t>(R.p())) return std::nullopt;
    return num / static_cast<std::int64_t>(R.p());
}

std::vector<Vector> theta_image(const CartierOperator& T, const std::vector<Vector>& W) {
    const FreeModule& F = T.free();
    const PolyRing& R = F.R();
    const auto p = static_cast<std::int32_t>(R.p());
    std::vector<Vector> cand;
    for (const auto& w : W) {
        // only shifts x^c moving some term of w onto a stored residue class contribute
        std::set<std::array<std::int32_t, kMaxVars>> shifts;
        for (const auto& t : w.terms)
            for (auto it = T.table().lower_bound({t.comp, {}}); it != T.table().end() && it->first.first == t.comp; ++it) {
                std::array<std::int32_t, kMaxVars> c{};
                for (int i = 0; i < R.n(); ++i) c[i] = ((it->first.second[i] - t.m.e[i]) % p + p) % p;
                shifts.insert(c);
            }
        for (const auto& c : shifts) {
            Monomial xc;
            xc.e = c;
            Vector v = T.apply(F.times_monomial(w, xc));
            if (!v.is_zero()) cand.push_back(std::move(v));
        }
    }
    if (cand.empty()) return {};
    auto comp = compute_groebner(F, T.module().relations(), cand);
    std::vector<Vector> out;
    for (auto k : comp.kept_candidates) out.push_back(cand[k]);
    return out;
}

std::vector<Vector> theta_image(const CartierOperator& T) {
    std::vector<Vector> out;
    for (const auto& [key, v] : T.table()) out.push_back(v);
    if (out.empty()) return out;
    auto comp = compute_groebner(T.free(), T.module().relations(), out);
    std::vector<Vector> kept;
    for (auto k : comp.kept_candidates) kept.push_back(out[k]);
    return kept;
}

bool submodule_contains(const Presentation& N, const std::vector<Vector>& A, const std::vector<Vector>& B) {
    auto gb = compute_groebner(N.free(), N.relations(), A).basis;
    for (const auto& b : B)
        if (!gb.reduce(b).is_zero()) return false;
    return true;
}

HslResult hsl_iterate(const CartierOperator& T, int cap) {
    const FreeModule& F = T.free();
    std::vector<Vector> W;
    for (std::size_t s = 0; s < F.rank(); ++s) W.push_back(F.unit(s));
    W = theta_image(T, W);
    for (int e = 1; e <= cap; ++e) {
        auto next = theta_image(T, W);
        if (submodule_contains(T.module(), next, W)) {
            HslResult r;
            r.index = e;
            r.nilpotent = submodule_contains(T.module(), {}, W);
            r.image = std::move(W);
            return r;
        }
        W = std::move(next);
    }
    throw CapExceeded("hsl_iterate: no stabilization within " + std::to_string(cap) + " steps");
}

std::size_t semilinearity_violations(const CartierOperator& T, std::uint64_t seed, std::size_t pairs) {
    const FreeModule& F = T.free();
    const PolyRing& R = F.R();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(1, R.p() - 1);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
        // the identity is additive, so v need not be homogeneous
        std::vector<VTerm> t;
        for (std::size_t s = 0; s < F.rank(); ++s)
            for (int c = 0; c < 2; ++c) {
                Monomial m;
                for (int i = 0; i < R.n(); ++i) m.e[i] = static_cast<std::int32_t>(rng() % 3);
                t.push_back({m, R.degree(m), static_cast<std::uint32_t>(s), coef(rng)});
            }
        Vector v = F.canonical(std::move(t));
        Monomial m;
        for (int i = 0; i < R.n(); ++i) m.e[i] = static_cast<std::int32_t>(rng() % 2);
        Polynomial f = Polynomial::monomial(F.ring(), m, coef(rng)) + Polynomial::monomial(F.ring(), Monomial{}, 1);
        Vector lhs = T.apply(F.times_poly(v, f.frobenius_power(R.p())));
        Vector rhs = F.times_poly(T.apply(v), f);
        if (!T.module().is_zero(F.sub(lhs, rhs))) ++bad;
    }
    return bad;
}

}  // namespace fsing
