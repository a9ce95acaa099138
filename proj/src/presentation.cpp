#include "fsing/presentation.hpp"

#include "fsing/errors.hpp"
#include "fsing/ideal.hpp"

#include <algorithm>
#include <set>

namespace fsing {

namespace {

std::vector<Vector> nonzero(std::vector<Vector> vs) {
    std::erase_if(vs, [](const Vector& v) { return v.is_zero(); });
    return vs;
}

}  // namespace

Presentation::Presentation(FreeModule F, std::vector<Vector> relations)
    : F_(std::move(F)), rel_(nonzero(std::move(relations))), cache_(std::make_shared<Cache>()) {}

const GroebnerBasis& Presentation::groebner() const {
    std::call_once(cache_->once, [&] { cache_->gb = fsing::groebner(F_, rel_); });
    return cache_->gb;
}

bool Presentation::contains(const std::vector<Vector>& vs) const {
    for (const auto& v : vs)
        if (!is_zero(v)) return false;
    return true;
}

bool Presentation::is_zero() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!is_zero(F_.unit(i))) return false;
    return true;
}

std::vector<std::pair<std::size_t, Monomial>> Presentation::basis(std::int64_t d) const {
    std::vector<std::pair<std::size_t, Monomial>> out;
    for (std::size_t c = 0; c < rank(); ++c) {
        auto leads = groebner().lead_monomials(c);
        for (const auto& m : standard_monomials(F_.R(), leads, d - degrees()[c])) out.emplace_back(c, m);
    }
    return out;
}

FpVector Presentation::coordinates(const Vector& v, std::int64_t d) const {
    auto B = basis(d);
    FpVector x(B.size(), 0);
    Vector r = reduce(v);
    for (const auto& t : r.terms) {
        auto it = std::find_if(B.begin(), B.end(),
                               [&](const auto& b) { return b.first == t.comp && b.second == t.m; });
        if (it == B.end()) throw InternalError("coordinates: vector not of degree " + std::to_string(d));
        x[it - B.begin()] = t.c;
    }
    return x;
}

int Presentation::krull_dim() const {
    int dim = -1;
    for (std::size_t c = 0; c < rank(); ++c)
        dim = std::max(dim, monomial_ideal_dim(F_.R(), groebner().lead_monomials(c)));
    return dim;
}

std::optional<std::int64_t> Presentation::length() const {
    if (krull_dim() > 0) return std::nullopt;
    std::int64_t total = 0;
    for (auto d : support_degrees()) total += dim(d);
    return total;
}

std::vector<std::int64_t> Presentation::support_degrees() const {
    const PolyRing& R = F_.R();
    std::set<std::int64_t> out;
    for (std::size_t c = 0; c < rank(); ++c) {
        auto leads = groebner().lead_monomials(c);
        int k = monomial_ideal_dim(R, leads);
        if (k > 0) throw PreconditionViolated("support_degrees: module is not of finite length");
        if (k < 0) continue;
        // every variable has a pure power among the leads; the top degree is bounded by the box
        std::int64_t top = 0;
        for (int i = 0; i < R.n(); ++i) {
            std::int32_t a = 0;
            for (const auto& m : leads) {
                bool pure = true;
                for (int j = 0; j < R.n(); ++j)
                    if (j != i && m.e[j]) pure = false;
                if (pure && m.e[i] > 0 && (a == 0 || m.e[i] < a)) a = m.e[i];
            }
            top += static_cast<std::int64_t>(a - 1) * R.weights()[i];
        }
        for (std::int64_t d = 0; d <= top; ++d)
            if (!standard_monomials(R, leads, d).empty()) out.insert(d + degrees()[c]);
    }
    return {out.begin(), out.end()};
}

Presentation Presentation::frobenius(int e) const {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) {
        if (q > (std::int64_t{1} << 40) / F_.R().p()) throw ExponentOverflow("frobenius: q too large");
        q *= F_.R().p();
    }
    std::vector<std::int64_t> deg;
    for (auto d : degrees()) deg.push_back(d * q);
    FreeModule G(F_.ring(), deg, F_.order());
    std::vector<Vector> rel;
    for (const auto& r : rel_) {
        std::vector<VTerm> t;
        for (const auto& x : r.terms) t.push_back({x.m.scaled(static_cast<std::int32_t>(q)), x.deg * q, x.comp, x.c});
        rel.push_back(G.canonical(std::move(t)));
    }
    return Presentation(G, rel);
}

Subquotient::Subquotient(FreeModule ambient, const std::vector<Vector>& gens, std::vector<Vector> modulo)
    : ambient_(std::move(ambient)), modulo_(nonzero(std::move(modulo))) {
    auto comp = compute_groebner(ambient_, modulo_, nonzero(gens));
    auto nz = nonzero(gens);
    for (auto k : comp.kept_candidates) gens_.push_back(nz[k]);
    std::vector<std::int64_t> deg;
    for (const auto& g : gens_) deg.push_back(*ambient_.degree(g));
    tracker_ = std::make_shared<TrackedBasis>(ambient_, gens_, deg, modulo_);
    FreeModule P(ambient_.ring(), deg, ambient_.order());
    std::vector<Vector> rel = tracker_->syzygies();
    if (!rel.empty()) rel = minimal_generators(P, rel);
    pres_ = Presentation(P, rel);
}

std::optional<Vector> Subquotient::coordinates(const Vector& w) const { return tracker_->lift(w); }

Vector Subquotient::representative(const Vector& a) const { return map_apply(ambient_, gens_, a); }

Vector map_apply(const FreeModule& target, const std::vector<Vector>& images, const Vector& v) {
    std::vector<VTerm> out;
    for (const auto& t : v.terms)
        for (const auto& s : images[t.comp].terms)
            out.push_back({s.m * t.m, s.deg + t.deg, s.comp, target.R().field().mul(s.c, t.c)});
    return target.canonical(std::move(out));
}

Vector ModuleMap::apply(const Vector& a) const { return map_apply(target.free(), images, a); }

bool ModuleMap::well_defined() const {
    for (const auto& r : source.relations())
        if (!target.is_zero(apply(r))) return false;
    return true;
}

Subquotient module_kernel(const ModuleMap& phi, bool relations_are_groebner) {
    std::vector<std::int64_t> deg;
    for (auto d : phi.source.degrees()) deg.push_back(d + phi.shift);
    TrackedBasis T(phi.target.free(), phi.images, deg, phi.target.relations(), relations_are_groebner);
    return Subquotient(phi.source.free(), T.syzygies(), phi.source.relations());
}

bool finite_length(const Presentation& M, std::int64_t* length) {
    auto l = M.length();
    if (l && length) *length = *l;
    return l.has_value();
}

}  // namespace fsing
