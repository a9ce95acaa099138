#include "fsing/groebner.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <tuple>
#include <unordered_set>

namespace fsing {

namespace {

std::atomic<std::size_t> g_pair_cap{200000};

std::uint64_t divmask(const Monomial& m) noexcept {
    std::uint64_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] > 0) mask |= 1ull << (4 * i);
        if (m.e[i] > 1) mask |= 1ull << (4 * i + 1);
        if (m.e[i] > 3) mask |= 1ull << (4 * i + 2);
        if (m.e[i] > 7) mask |= 1ull << (4 * i + 3);
    }
    return mask;
}

/// Working state of one Buchberger run: a growing list of monic elements.
class Workspace {
public:
    explicit Workspace(const FreeModule& F) : F_(F), by_comp_(F.rank()) {}

    std::optional<std::size_t> reducer(const VTerm& t, std::uint64_t mask) const noexcept {
        for (std::size_t k : by_comp_[t.comp])
            if ((masks_[k] & ~mask) == 0 && G_[k].lead().m.divides(t.m)) return k;
        return std::nullopt;
    }

    Vector top_reduce(Vector h) const {
        while (!h.is_zero()) {
            const VTerm& t = h.lead();
            auto r = reducer(t, divmask(t.m));
            if (!r) break;
            const VTerm& g = G_[*r].lead();
            Monomial q = t.m / g.m;
            h = F_.sub_multiple(h, G_[*r], q, t.deg - g.deg, t.c);
        }
        return h;
    }

    std::size_t add(Vector h) {
        h = F_.monic(h);
        std::size_t idx = G_.size();
        masks_.push_back(divmask(h.lead().m));
        by_comp_[h.lead().comp].push_back(idx);
        G_.push_back(std::move(h));
        return idx;
    }

    const std::vector<Vector>& elements() const noexcept { return G_; }
    std::vector<Vector>& elements() noexcept { return G_; }
    const std::vector<std::size_t>& in_comp(std::size_t c) const { return by_comp_[c]; }

private:
    const FreeModule& F_;
    std::vector<Vector> G_;
    std::vector<std::vector<std::size_t>> by_comp_;
    std::vector<std::uint64_t> masks_;
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

GbOptions default_gb_options() { return GbOptions{g_pair_cap.load()}; }
void set_default_pair_cap(std::size_t cap) { g_pair_cap.store(cap); }

GroebnerBasis::GroebnerBasis(FreeModule F, std::vector<Vector> elements)
    : F_(std::move(F)), G_(std::move(elements)), by_comp_(F_.rank()) {
    for (std::size_t k = 0; k < G_.size(); ++k) {
        by_comp_[G_[k].lead().comp].push_back(k);
        masks_.push_back(divmask(G_[k].lead().m));
    }
}

std::optional<std::size_t> GroebnerBasis::find_reducer(const VTerm& t) const noexcept {
    if (t.comp >= by_comp_.size()) return std::nullopt;
    std::uint64_t mask = divmask(t.m);
    for (std::size_t k : by_comp_[t.comp])
        if ((masks_[k] & ~mask) == 0 && G_[k].lead().m.divides(t.m)) return k;
    return std::nullopt;
}

Vector GroebnerBasis::reduce(const Vector& v) const {
    Vector rem;
    Vector h = v;
    std::size_t pos = 0;
    while (pos < h.terms.size()) {
        const VTerm t = h.terms[pos];
        auto r = find_reducer(t);
        if (!r) {
            rem.terms.push_back(t);
            ++pos;
            continue;
        }
        const VTerm& g = G_[*r].lead();
        Vector tail;
        tail.terms.assign(h.terms.begin() + static_cast<std::ptrdiff_t>(pos), h.terms.end());
        h = F_.sub_multiple(tail, G_[*r], t.m / g.m, t.deg - g.deg, F_.R().field().mul(t.c, F_.R().field().inv(g.c)));
        pos = 0;
    }
    return rem;
}

GroebnerBasis::Division GroebnerBasis::divide(const Vector& v) const {
    const auto& K = F_.R().field();
    std::vector<std::vector<Term>> q(G_.size());
    Vector rem;
    Vector h = v;
    std::size_t pos = 0;
    while (pos < h.terms.size()) {
        const VTerm t = h.terms[pos];
        auto r = find_reducer(t);
        if (!r) {
            rem.terms.push_back(t);
            ++pos;
            continue;
        }
        const VTerm& g = G_[*r].lead();
        Coeff c = K.mul(t.c, K.inv(g.c));
        Monomial m = t.m / g.m;
        q[*r].push_back({m, t.deg - g.deg, c});
        Vector tail;
        tail.terms.assign(h.terms.begin() + static_cast<std::ptrdiff_t>(pos), h.terms.end());
        h = F_.sub_multiple(tail, G_[*r], m, t.deg - g.deg, c);
        pos = 0;
    }
    Division d;
    d.remainder = std::move(rem);
    for (auto& terms : q) d.quotients.push_back(Polynomial::from_terms(F_.ring(), std::move(terms)));
    return d;
}

std::vector<Monomial> GroebnerBasis::lead_monomials(std::size_t c) const {
    std::vector<Monomial> out;
    if (c < by_comp_.size())
        for (std::size_t k : by_comp_[c]) out.push_back(G_[k].lead().m);
    return out;
}

GbComputation compute_groebner(const FreeModule& F, const std::vector<Vector>& base,
                               const std::vector<Vector>& candidates) {
    return compute_groebner(F, base, candidates, default_gb_options());
}

GbComputation compute_groebner(const FreeModule& F, const std::vector<Vector>& base,
                               const std::vector<Vector>& candidates, const GbOptions& opt) {
    struct Input {
        std::int64_t deg;
        int kind;  // 0 base, 1 candidate
        std::size_t idx;
    };
    std::vector<Input> inputs;
    auto push_inputs = [&](const std::vector<Vector>& vs, int kind) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i].is_zero()) continue;
            auto d = F.degree(vs[i]);
            if (!d) throw NonHomogeneous("Gröbner input " + F.to_string(vs[i]) + " is not homogeneous");
            inputs.push_back({*d, kind, i});
        }
    };
    push_inputs(base, 0);
    push_inputs(candidates, 1);
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
        return std::tie(a.deg, a.kind, a.idx) < std::tie(b.deg, b.kind, b.idx);
    });

    Workspace W(F);
    std::set<std::tuple<std::int64_t, std::size_t, std::size_t>> queue;  // (deg, j, i), i < j
    std::unordered_set<std::uint64_t> pending;
    GbComputation out;
    const bool ideal_case = F.rank() == 1;

    std::vector<bool> from_base;
    auto add_element = [&](Vector h, bool is_base) {
        std::size_t j = W.add(std::move(h));
        from_base.resize(j + 1);
        from_base[j] = is_base;
        const VTerm& lj = W.elements()[j].lead();
        for (std::size_t i : W.in_comp(lj.comp)) {
            if (i == j) continue;
            if (is_base && from_base[i]) continue;
            const VTerm& li = W.elements()[i].lead();
            if (ideal_case && li.m.coprime(lj.m)) continue;
            Monomial L = li.m.lcm(lj.m);
            std::int64_t d = F.R().degree(L) + F.basis_degrees()[lj.comp];
            queue.emplace(d, j, i);
            pending.insert(pair_key(i, j));
        }
    };

    auto chain_criterion = [&](std::size_t i, std::size_t j, const Monomial& L, std::uint32_t comp) {
        for (std::size_t k : W.in_comp(comp)) {
            if (k == i || k == j) continue;
            if (!W.elements()[k].lead().m.divides(L)) continue;
            if (pending.count(pair_key(i, k)) || pending.count(pair_key(j, k))) continue;
            return true;
        }
        return false;
    };

    std::size_t ip = 0;
    while (!queue.empty() || ip < inputs.size()) {
        std::int64_t d;
        if (queue.empty()) d = inputs[ip].deg;
        else if (ip == inputs.size()) d = std::get<0>(*queue.begin());
        else d = std::min(inputs[ip].deg, std::get<0>(*queue.begin()));
        if (opt.max_degree && d > *opt.max_degree) break;

        while (!queue.empty() && std::get<0>(*queue.begin()) == d) {
            auto [deg, j, i] = *queue.begin();
            queue.erase(queue.begin());
            pending.erase(pair_key(i, j));
            const Vector& gi = W.elements()[i];
            const Vector& gj = W.elements()[j];
            Monomial L = gi.lead().m.lcm(gj.lead().m);
            if (chain_criterion(i, j, L, gi.lead().comp)) continue;
            if (++out.pairs_reduced > opt.pair_cap)
                throw PairCapExceeded("more than " + std::to_string(opt.pair_cap) + " S-pairs");
            Monomial mi = L / gi.lead().m, mj = L / gj.lead().m;
            Vector s = F.times_monomial(gi, mi);
            s = F.sub_multiple(s, gj, mj, F.R().degree(mj), 1);
            s = W.top_reduce(std::move(s));
            if (!s.is_zero()) add_element(std::move(s), false);
        }
        while (ip < inputs.size() && inputs[ip].deg == d) {
            const Input& in = inputs[ip++];
            const Vector& v = in.kind == 0 ? base[in.idx] : candidates[in.idx];
            Vector h = W.top_reduce(v);
            if (h.is_zero()) continue;
            const bool untouched = h.terms.size() == v.terms.size() && h.lead() == v.lead();
            add_element(std::move(h), opt.base_is_groebner && in.kind == 0 && untouched);
            if (in.kind == 1) out.kept_candidates.push_back(in.idx);
        }
    }

    // tail reduction; leads are already pairwise non-divisible
    auto& G = W.elements();
    std::vector<Vector> reduced(G.begin(), G.end());
    GroebnerBasis all(F, reduced);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        Vector tail;
        tail.terms.assign(reduced[k].terms.begin() + 1, reduced[k].terms.end());
        Vector r = all.reduce(tail);
        Vector v;
        v.terms.push_back(reduced[k].lead());
        v.terms.insert(v.terms.end(), r.terms.begin(), r.terms.end());
        reduced[k] = std::move(v);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Vector& a, const Vector& b) { return F.compare(a.lead(), b.lead()) < 0; });
    out.basis = GroebnerBasis(F, std::move(reduced));
    std::sort(out.kept_candidates.begin(), out.kept_candidates.end());
    return out;
}

GroebnerBasis groebner(const FreeModule& F, const std::vector<Vector>& gens) {
    return compute_groebner(F, {}, gens).basis;
}

std::vector<Vector> minimal_generators(const FreeModule& F, const std::vector<Vector>& gens,
                                       const std::vector<Vector>& modulo) {
    auto r = compute_groebner(F, modulo, gens);
    std::vector<Vector> out;
    for (auto k : r.kept_candidates) out.push_back(gens[k]);
    return out;
}

TrackedBasis::TrackedBasis(const FreeModule& F, std::vector<Vector> gens, std::vector<std::int64_t> degrees,
                           const std::vector<Vector>& modulo, bool modulo_is_groebner,
                           std::optional<std::int64_t> max_degree)
    : F_(F), gens_(std::move(gens)) {
    std::vector<std::int64_t> ext_deg = F.basis_degrees();
    std::vector<std::int64_t> coeff_deg;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Vector& g = gens_[i];
        std::int64_t d = i < degrees.size() ? degrees[i] : 0;
        if (!g.is_zero() && degrees.empty()) {
            auto dd = F.degree(g);
            if (!dd) throw NonHomogeneous("tracked generator " + F.to_string(g) + " is not homogeneous");
            d = *dd;
        }
        coeff_deg.push_back(d);
        ext_deg.push_back(d);
    }
    ext_ = FreeModule(F.ring(), ext_deg, F.order());
    coeffs_ = FreeModule(F.ring(), coeff_deg, F.order());
    std::vector<Vector> graph;
    graph.reserve(gens_.size());
    const auto r = static_cast<std::uint32_t>(F.rank());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        Vector v = gens_[i];
        v.terms.push_back({Monomial{}, 0, r + static_cast<std::uint32_t>(i), 1});
        graph.push_back(std::move(v));
    }
    GbOptions opt = default_gb_options();
    opt.base_is_groebner = modulo_is_groebner;
    opt.max_degree = max_degree;
    gb_ = compute_groebner(ext_, modulo, graph, opt).basis;
}

std::optional<Vector> TrackedBasis::lift(const Vector& v) const {
    const auto r = static_cast<std::uint32_t>(F_.rank());
    Vector h = v;
    while (!h.is_zero() && h.lead().comp < r) {
        auto k = gb_.find_reducer(h.lead());
        if (!k) return std::nullopt;
        const VTerm& t = h.lead();
        const VTerm& g = gb_.elements()[*k].lead();
        h = ext_.sub_multiple(h, gb_.elements()[*k], t.m / g.m, t.deg - g.deg,
                              F_.R().field().mul(t.c, F_.R().field().inv(g.c)));
    }
    Vector c;
    c.terms.reserve(h.terms.size());
    for (const auto& t : h.terms) c.terms.push_back({t.m, t.deg, t.comp - r, F_.R().field().neg(t.c)});
    return c;
}

std::vector<Vector> TrackedBasis::syzygies() const {
    const auto r = static_cast<std::uint32_t>(F_.rank());
    std::vector<Vector> out;
    for (const auto& g : gb_.elements()) {
        if (g.lead().comp < r) continue;
        Vector s;
        s.terms.reserve(g.terms.size());
        for (const auto& t : g.terms) s.terms.push_back({t.m, t.deg, t.comp - r, t.c});
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Vector> syzygies(const FreeModule& F, const std::vector<Vector>& gens,
                             std::vector<std::int64_t> degrees) {
    return TrackedBasis(F, gens, std::move(degrees)).syzygies();
}

}  // namespace fsing
