#include "fsing/free_module.hpp"

#include <algorithm>

namespace fsing {

Vector FreeModule::unit(std::size_t i) const {
    Vector v;
    v.terms.push_back({Monomial{}, 0, static_cast<std::uint32_t>(i), 1});
    return v;
}

Vector FreeModule::single(std::size_t i, const Polynomial& f) const {
    std::vector<VTerm> t;
    t.reserve(f.size());
    for (const auto& x : f.terms()) t.push_back({x.m, x.deg, static_cast<std::uint32_t>(i), x.c});
    if (order_.kind == TermOrder::Kind::Grevlex) return {std::move(t)};
    return canonical(std::move(t));
}

Vector FreeModule::from_polys(const std::vector<Polynomial>& comps) const {
    std::vector<VTerm> t;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& x : comps[i].terms()) t.push_back({x.m, x.deg, static_cast<std::uint32_t>(i), x.c});
    if (order_.kind == TermOrder::Kind::Grevlex) return {std::move(t)};
    return canonical(std::move(t));
}

Vector FreeModule::canonical(std::vector<VTerm> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
    Vector v;
    const auto& F = ring_->field();
    for (const auto& t : terms) {
        if (!v.terms.empty() && v.terms.back().comp == t.comp && v.terms.back().m == t.m) {
            v.terms.back().c = F.add(v.terms.back().c, t.c);
            if (!v.terms.back().c) v.terms.pop_back();
        } else if (t.c % ring_->p()) {
            VTerm x = t;
            x.c %= ring_->p();
            v.terms.push_back(x);
        }
    }
    return v;
}

Polynomial FreeModule::component(const Vector& v, std::size_t i) const {
    std::vector<Term> t;
    for (const auto& x : v.terms)
        if (x.comp == i) t.push_back({x.m, x.deg, x.c});
    return Polynomial::from_terms(ring_, std::move(t));
}

std::vector<Polynomial> FreeModule::components(const Vector& v) const {
    std::vector<std::vector<Term>> parts(rank());
    for (const auto& x : v.terms) parts[x.comp].push_back({x.m, x.deg, x.c});
    std::vector<Polynomial> out;
    out.reserve(rank());
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
    return out;
}

namespace {

template <class Emit>
void merge_terms(const FreeModule& M, const std::vector<VTerm>& a, const std::vector<VTerm>& b, Emit&& emit_b,
                 bool subtract, std::vector<VTerm>& out) {
    const auto& F = M.R().field();
    std::size_t i = 0, j = 0;
    VTerm tb;
    bool have_b = false;
    auto next_b = [&]() {
        if (j < b.size()) {
            tb = emit_b(b[j]);
            have_b = true;
        } else {
            have_b = false;
        }
    };
    next_b();
    while (i < a.size() || have_b) {
        int c;
        if (i == a.size()) c = -1;
        else if (!have_b) c = 1;
        else c = M.compare(a[i], tb);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            VTerm t = tb;
            if (subtract) t.c = F.neg(t.c);
            if (t.c) out.push_back(t);
            ++j;
            next_b();
        } else {
            Coeff s = subtract ? F.sub(a[i].c, tb.c) : F.add(a[i].c, tb.c);
            if (s) out.push_back({a[i].m, a[i].deg, a[i].comp, s});
            ++i;
            ++j;
            next_b();
        }
    }
}

}  // namespace

Vector FreeModule::add(const Vector& a, const Vector& b) const {
    Vector r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    merge_terms(*this, a.terms, b.terms, [](const VTerm& t) { return t; }, false, r.terms);
    return r;
}

Vector FreeModule::sub(const Vector& a, const Vector& b) const {
    Vector r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    merge_terms(*this, a.terms, b.terms, [](const VTerm& t) { return t; }, true, r.terms);
    return r;
}

Vector FreeModule::sub_multiple(const Vector& a, const Vector& b, const Monomial& m, std::int64_t dm,
                                Coeff c) const {
    const auto& F = ring_->field();
    Vector r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    merge_terms(
        *this, a.terms, b.terms,
        [&](const VTerm& t) { return VTerm{t.m * m, t.deg + dm, t.comp, F.mul(t.c, c)}; }, true, r.terms);
    return r;
}

Vector FreeModule::scale(const Vector& v, Coeff c) const {
    c %= ring_->p();
    if (!c) return {};
    Vector r = v;
    for (auto& t : r.terms) t.c = ring_->field().mul(t.c, c);
    return r;
}

Vector FreeModule::times_monomial(const Vector& v, const Monomial& m, Coeff c) const {
    c %= ring_->p();
    if (!c) return {};
    std::int64_t dm = ring_->degree(m);
    Vector r;
    r.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) r.terms.push_back({t.m * m, t.deg + dm, t.comp, ring_->field().mul(t.c, c)});
    return r;
}

Vector FreeModule::times_poly(const Vector& v, const Polynomial& f) const {
    Vector acc;
    for (const auto& t : f.terms()) acc = add(acc, times_monomial(v, t.m, t.c));
    return acc;
}

Vector FreeModule::monic(const Vector& v) const {
    if (v.is_zero()) return v;
    return scale(v, ring_->field().inv(v.lead().c));
}

bool FreeModule::is_homogeneous(const Vector& v) const noexcept {
    if (v.is_zero()) return true;
    std::int64_t d = term_degree(v.terms.front());
    for (const auto& t : v.terms)
        if (term_degree(t) != d) return false;
    return true;
}

std::optional<std::int64_t> FreeModule::degree(const Vector& v) const noexcept {
    if (v.is_zero() || !is_homogeneous(v)) return std::nullopt;
    return term_degree(v.terms.front());
}

std::string FreeModule::to_string(const Vector& v) const {
    if (rank() == 1) return component(v, 0).to_string();
    std::string s = "[";
    auto parts = components(v);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += parts[i].to_string();
    }
    return s + "]";
}

}  // namespace fsing
