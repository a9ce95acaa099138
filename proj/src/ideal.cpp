#include "fsing/ideal.hpp"

#include "fsing/errors.hpp"

#include <functional>

namespace fsing {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, TermOrder order)
    : ring_(std::move(ring)), order_(order), F_(ring_, {0}, order), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw NonHomogeneous("generator " + g.to_string() + " is not homogeneous");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::maximal(RingPtr ring) {
    std::vector<Polynomial> g;
    for (int i = 0; i < ring->n(); ++i) g.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(g));
}

const GroebnerBasis& Ideal::groebner() const {
    std::call_once(cache_->once, [&] {
        std::vector<Vector> v;
        for (const auto& g : gens_) v.push_back(as_vector(g));
        cache_->gb = fsing::groebner(F_, v);
    });
    return cache_->gb;
}

std::vector<Polynomial> Ideal::reduced_groebner() const {
    std::vector<Polynomial> out;
    for (const auto& g : groebner().elements()) out.push_back(as_polynomial(g));
    return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const { return as_polynomial(groebner().reduce(as_vector(f))); }
bool Ideal::contains(const Polynomial& f) const { return groebner().reduce(as_vector(f)).is_zero(); }

bool Ideal::contains(const Ideal& J) const {
    for (const auto& g : J.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    for (const auto& g : groebner().elements())
        if (g.lead().m.is_one()) return true;
    return false;
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::plus(const Ideal& J) const {
    auto g = gens_;
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return Ideal(ring_, std::move(g), order_);
}

Ideal Ideal::plus(const Polynomial& f) const {
    auto g = gens_;
    g.push_back(f);
    return Ideal(ring_, std::move(g), order_);
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

NormalForm normal_form(const Polynomial& f, const std::vector<Polynomial>& G, TermOrder order) {
    FreeModule F(f.ring(), {0}, order);
    std::vector<Vector> gv;
    for (const auto& g : G) gv.push_back(F.monic(F.single(0, g)));
    // keep basis order aligned with G; GroebnerBasis stores the monic copies
    GroebnerBasis B(F, gv);
    auto d = B.divide(F.single(0, f));
    NormalForm out;
    out.remainder = F.component(d.remainder, 0);
    const auto& K = f.ring()->field();
    for (std::size_t i = 0; i < G.size(); ++i) {
        // quotient w.r.t. the monic copy; rescale to the original generator
        Coeff lc = G[i].is_zero() ? 1 : G[i].lead().c;
        out.quotients.push_back(d.quotients[i].scaled(K.inv(lc)));
    }
    return out;
}

std::vector<Polynomial> reduced_groebner(const Ideal& I, TermOrder order) {
    return I.with_order(order).reduced_groebner();
}

Ideal colon(const Ideal& I, const Polynomial& g) {
    const auto& R = I.ring();
    if (g.is_zero() || I.contains(g)) return Ideal(R, {Polynomial::constant(R, 1)});
    if (I.is_zero()) return Ideal::zero(R);
    FreeModule F(R, {0});
    std::vector<Vector> gens{F.single(0, g)};
    for (const auto& f : I.generators()) gens.push_back(F.single(0, f));
    auto syz = syzygies(F, gens);
    std::vector<Polynomial> out;
    for (const auto& s : syz) {
        Polynomial a = Polynomial::from_terms(R, {});
        std::vector<Term> t;
        for (const auto& x : s.terms)
            if (x.comp == 0) t.push_back({x.m, x.deg, x.c});
        a = Polynomial::from_terms(R, std::move(t));
        if (!a.is_zero()) out.push_back(std::move(a));
    }
    Ideal C(R, std::move(out));
    return Ideal(R, C.reduced_groebner());
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    const auto& R = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal::zero(R);
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    FreeModule F(R, {0});
    std::vector<Vector> gens;
    for (const auto& f : I.generators()) gens.push_back(F.single(0, f));
    for (const auto& f : J.generators()) gens.push_back(F.single(0, f));
    TrackedBasis T(F, gens);
    const auto& C = T.coefficient_module();
    std::vector<Polynomial> out;
    for (const auto& s : T.syzygies()) {
        Polynomial acc(R);
        auto parts = C.components(s);
        for (std::size_t k = 0; k < I.generators().size(); ++k) acc = acc + parts[k] * I.generators()[k];
        if (!acc.is_zero()) out.push_back(std::move(acc));
    }
    Ideal X(R, std::move(out));
    return Ideal(R, X.reduced_groebner());
}

Ideal colon(const Ideal& I, const Ideal& J) {
    const auto& R = I.ring();
    Ideal acc(R, {Polynomial::constant(R, 1)});
    for (const auto& g : J.generators()) acc = intersect(acc, colon(I, g));
    return acc;
}

Ideal bracket_power(const Ideal& I, int e) {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) {
        q *= I.ring()->p();
        if (q > (1ll << 30)) throw ExponentOverflow("p^e too large");
    }
    std::vector<Polynomial> g;
    for (const auto& f : I.generators()) g.push_back(f.frobenius_power(q));
    return Ideal(I.ring(), std::move(g), I.order());
}

Ideal eliminate(const Ideal& I, int front_block) {
    Ideal E = I.with_order(TermOrder::elimination(front_block));
    std::vector<Polynomial> keep;
    for (const auto& g : E.reduced_groebner()) {
        bool free = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < front_block; ++i)
                if (t.m.e[i]) free = false;
        if (free) keep.push_back(g);
    }
    return Ideal(I.ring(), std::move(keep));
}

std::vector<Monomial> monomials_of_degree(const PolyRing& R, std::int64_t d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
        if (i == R.n() - 1) {
            if (left % R.weights()[i] == 0) {
                cur.e[i] = static_cast<std::int32_t>(left / R.weights()[i]);
                out.push_back(cur);
                cur.e[i] = 0;
            }
            return;
        }
        for (std::int64_t a = left / R.weights()[i]; a >= 0; --a) {
            cur.e[i] = static_cast<std::int32_t>(a);
            rec(i + 1, left - a * R.weights()[i]);
        }
        cur.e[i] = 0;
    };
    rec(0, d);
    return out;
}

std::vector<Monomial> standard_monomials(const PolyRing& R, const std::vector<Monomial>& leads, std::int64_t d) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(R, d)) {
        bool std_mon = true;
        for (const auto& l : leads)
            if (l.divides(m)) {
                std_mon = false;
                break;
            }
        if (std_mon) out.push_back(m);
    }
    return out;
}

int monomial_ideal_dim(const PolyRing& R, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.is_one()) return -1;
    const int n = R.n();
    int best = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        int size = __builtin_popcount(S);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (int i = 0; i < n; ++i)
                if (l.e[i] && !(S >> i & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

std::vector<std::int64_t> hilbert_sample(const Ideal& I, std::int64_t lo, std::int64_t hi) {
    auto leads = I.lead_monomials();
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        out.push_back(static_cast<std::int64_t>(standard_monomials(*I.ring(), leads, d).size()));
    return out;
}

int krull_dim(const Ideal& I) {
    if (I.is_unit()) throw UnitIdeal("dimension of A/(1)");
    return monomial_ideal_dim(*I.ring(), I.lead_monomials());
}

}  // namespace fsing
