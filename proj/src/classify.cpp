#include "fsing/classify.hpp"

#include "fsing/deformation.hpp"
#include "fsing/errors.hpp"

namespace fsing {

namespace {

std::vector<Vector> units(const FreeModule& F) {
    std::vector<Vector> u;
    for (std::size_t s = 0; s < F.rank(); ++s) u.push_back(F.unit(s));
    return u;
}

std::string element_string(const Subquotient& N, const Vector& a) {
    return N.ambient().to_string(N.representative(a));
}

std::string elements_string(const Subquotient& N, const std::vector<Vector>& as) {
    std::string s = "[";
    for (std::size_t k = 0; k < as.size(); ++k) {
        if (k) s += ", ";
        s += element_string(N, as[k]);
    }
    return s + "]";
}

std::int64_t positive_degree(const Polynomial& x) {
    if (x.is_zero()) throw PreconditionViolated("element is zero");
    auto d = x.weighted_degree();
    if (!d || *d <= 0) throw PreconditionViolated("element must be homogeneous of positive degree");
    return *d;
}

Subquotient multiplication_kernel(const Subquotient& N, const Polynomial& x) {
    const Presentation& M = N.module();
    std::vector<Vector> images;
    for (std::size_t s = 0; s < M.rank(); ++s) images.push_back(M.free().single(s, x));
    return module_kernel(ModuleMap{M, M, images, positive_degree(x)});
}

/// First kernel generator that is nonzero in N, if any.
std::optional<Vector> nonzero_generator(const Subquotient& K, const Presentation& N) {
    for (const auto& g : K.generators())
        if (!N.is_zero(g)) return g;
    return std::nullopt;
}

template <class Pred>
ElementVerdict element_test(const ExtFrobenius& data, const Polynomial& x, Pred ok) {
    if (!regular_element(data.ideal(), x)) throw NotRegular(x.to_string() + " is not a regular element");
    const int n = data.n();
    for (int j = 0; j <= n; ++j) {
        const Subquotient& N = data.ext(j);
        if (N.generators().empty() || N.module().is_zero()) continue;
        Subquotient K = multiplication_kernel(N, x);
        if (!ok(K)) {
            ElementVerdict v{Tri::False, n - j, ""};
            if (auto g = nonzero_generator(K, N.module())) v.witness = element_string(N, *g);
            return v;
        }
    }
    return {Tri::True, -1, ""};
}

FreeResolution shifted(const FreeResolution& res, std::int64_t s) {
    std::vector<FreeModule> mods;
    std::vector<std::vector<Vector>> maps;
    for (std::size_t k = 0; k <= res.length(); ++k) {
        std::vector<std::int64_t> d;
        for (auto x : res.module(k).basis_degrees()) d.push_back(x + s);
        mods.emplace_back(res.module(k).ring(), d, res.module(k).order());
        maps.push_back(res.map(k));
    }
    return FreeResolution(std::move(mods), std::move(maps), res.complete());
}

Verdict aggregate(const std::vector<IndexReport>& idx, Verdict IndexReport::*field) {
    Verdict out{Tri::True, ""};
    for (const auto& r : idx) {
        const Verdict& v = r.*field;
        if (v.status == Tri::False) return {Tri::False, "i=" + std::to_string(r.i) + ": " + v.witness};
        if (v.status == Tri::Unknown) out.status = Tri::Unknown;
    }
    return out;
}

}  // namespace

Ideal frobenius_colon(const Ideal& I, std::optional<std::int64_t> max_degree) {
    const auto& R = I.ring();
    const auto& g = I.generators();
    if (I.is_zero()) return Ideal(R, {Polynomial::constant(R, 1)});
    // (I^[p] : I) = ker(A -> (A/I^[p])^m, 1 -> (g_1..g_m)); the twisted Gröbner basis of I is one for I^[p]
    const std::int64_t p = R->p();
    std::vector<std::int64_t> deg;
    for (const auto& f : g) deg.push_back(-*f.weighted_degree());
    FreeModule T(R, deg);
    const auto gb = I.reduced_groebner();
    std::vector<Vector> rel;
    for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& b : gb) rel.push_back(T.single(k, b.frobenius_power(p)));
    TrackedBasis K(T, {T.from_polys(g)}, {0}, rel, true, max_degree);
    std::vector<Polynomial> out;
    for (const auto& v : K.syzygies()) out.push_back(K.coefficient_module().component(v, 0));
    return Ideal(R, std::move(out));
}

FedderResult fedder_test(const Ideal& I) {
    const auto& R = I.ring();
    const auto p = static_cast<std::int32_t>(R->p());
    // a witness can be moved to degree (p-1) deg(x_1 ... x_n) by multiplying with a monomial
    Ideal C = frobenius_colon(I, (p - 1) * R->total_weight());
    auto outside = [&](const Polynomial& f) {
        for (const auto& t : f.terms()) {
            bool small = true;
            for (int v = 0; v < R->n(); ++v)
                if (t.m.e[v] >= p) small = false;
            if (small) return true;
        }
        return false;
    };
    std::vector<Polynomial> gens = C.generators();
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return std::pair(*a.weighted_degree(), a.terms().size()) < std::pair(*b.weighted_degree(), b.terms().size());
    });
    for (const auto& f : gens)
        if (outside(f)) return {true, f};
    return {false, std::nullopt};
}

bool regular_element(const Ideal& I, const Polynomial& x) {
    positive_degree(x);
    return I.contains(colon(I, x));
}

ElementVerdict surjective_element(const ExtFrobenius& data, const Polynomial& x) {
    return element_test(data, x, [](const Subquotient& K) { return K.module().is_zero(); });
}

ElementVerdict strictly_filter_regular(const ExtFrobenius& data, const Polynomial& x) {
    return element_test(data, x, [](const Subquotient& K) { return finite_length(K.module()); });
}

bool theta_surjective(const CartierOperator& T) {
    if (T.free().rank() == 0) return true;
    return submodule_contains(T.module(), theta_image(T), units(T.free()));
}

bool twisted_injectivity(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x, int i) {
    const int j = data->n() - i;
    if (j < 0 || data->ext(j).generators().empty()) return true;
    CartierOperator T(data, j, x.pow(data->ideal().ring()->p() - 1));
    return theta_surjective(T);
}

bool power_map_injective(const Ideal& I, const Polynomial& x, int h, int k) {
    if (h < 1 || k <= h) throw PreconditionViolated("need 1 <= h < k");
    const auto& R = I.ring();
    FreeResolution target = resolve_quotient(I.plus(x.pow(static_cast<std::uint64_t>(k))));
    FreeResolution source = shifted(resolve_quotient(I.plus(x.pow(static_cast<std::uint64_t>(h)))),
                                    positive_degree(x) * (k - h));
    Polynomial m = x.pow(static_cast<std::uint64_t>(k - h));
    ChainMap phi = chain_lift(source, target, {target.module(0).single(0, m)});
    for (std::size_t j = 0; j <= static_cast<std::size_t>(R->n()); ++j) {
        if (j > source.length()) break;
        Subquotient Nh = ext_module(source, j);
        if (Nh.generators().empty() || Nh.module().is_zero()) continue;
        std::vector<Vector> images;
        if (j <= target.length()) {
            Subquotient Nk = ext_module(target, j);
            auto dual = dual_chain_map(source, target, phi, j);
            for (const auto& z : Nk.generators()) {
                auto c = Nh.coordinates(map_apply(Nh.ambient(), dual, z));
                if (!c) throw LiftFailure("induced map does not send cocycles to cocycles");
                images.push_back(*c);
            }
        }
        if (!submodule_contains(Nh.module(), images, units(Nh.module().free()))) return false;
    }
    return true;
}

ClassificationReport classify(const Ideal& I, const ClassifyOptions& opt) {
    if (I.is_unit()) throw UnitIdeal("classify needs a proper ideal");
    return classify(std::make_shared<const ExtFrobenius>(I), opt);
}

ClassificationReport classify(const std::shared_ptr<const ExtFrobenius>& data, const ClassifyOptions& opt) {
    const Ideal& I = data->ideal();
    if (I.is_unit()) throw UnitIdeal("classify needs a proper ideal");
    ClassificationReport r;
    r.n = data->n();
    r.dim = krull_dim(I);
    r.depth = r.n - static_cast<int>(projective_dimension(data->resolution()));
    r.f_m = r.dim;
    bool f_m_set = false;
    for (int i = 0; i <= r.dim; ++i) {
        IndexReport x;
        x.i = i;
        x.j = r.n - i;
        const Subquotient& N = data->ext(x.j);
        x.vanishes = N.generators().empty() || N.module().is_zero();
        if (x.vanishes) {
            x.length = 0;
            x.F_injective = x.F_full = x.F_nilpotent = {Tri::True, ""};
            r.indices.push_back(std::move(x));
            continue;
        }
        std::int64_t len = 0;
        if (finite_length(N.module(), &len)) x.length = len;
        if (!x.length && !f_m_set) {
            r.f_m = i;
            f_m_set = true;
        }
        try {
            CartierOperator T(data, x.j);
            auto img = theta_image(T);
            x.F_injective = {Tri::True, ""};
            for (const auto& u : units(T.free()))
                if (!submodule_contains(T.module(), img, {u})) {
                    x.F_injective = {Tri::False, element_string(N, u)};
                    break;
                }
            try {
                auto h = hsl_iterate(T, opt.hsl_cap);
                x.hsl_index = h.index;
                x.F_nilpotent = {tri(h.nilpotent), h.nilpotent ? "" : elements_string(N, h.image)};
            } catch (const CapError&) {
            }
        } catch (const CapError&) {
        }
        if (opt.full) {
            try {
                auto ker = data->delta_kernel(x.j);
                x.F_full = ker.empty() ? Verdict{Tri::True, ""} : Verdict{Tri::False, element_string(N, ker.front())};
            } catch (const CapError&) {
            }
        }
        r.indices.push_back(std::move(x));
    }
    r.is_CM = r.depth == r.dim;
    r.is_gCM = r.f_m == r.dim;
    r.F_injective = aggregate(r.indices, &IndexReport::F_injective);
    r.F_full = opt.full ? aggregate(r.indices, &IndexReport::F_full) : Verdict{};
    r.strongly_F_injective.status = tri_and(r.F_injective.status, r.F_full.status);
    if (r.F_injective.status == Tri::False)
        r.strongly_F_injective.witness = "F-injective fails at " + r.F_injective.witness;
    else if (r.F_full.status == Tri::False)
        r.strongly_F_injective.witness = "F-full fails at " + r.F_full.witness;
    if (opt.fedder) {
        try {
            auto f = fedder_test(I);
            r.F_pure = {tri(f.pure), f.witness ? f.witness->to_string() : ""};
        } catch (const CapError&) {
        }
    }

    const Fact target{Subject::Ring, Property::FAntiNilpotent};
    if (r.F_pure.status == Tri::True) {
        DeformationCertificate c;
        c.target = target;
        c.proved = true;
        Premise pure{{Subject::Ring, Property::FPure}, Tri::True, "computed", r.F_pure.witness};
        c.evaluated.push_back(pure);
        for (const auto& rule : inference_rules())
            if (rule.id == "R9" && rule.conclusions.front() == target)
                c.chain.push_back({rule.id, rule.statement, {pure}, rule.conclusions});
        r.F_anti_nilpotent = {Tri::True, "F-pure with Fedder witness " + r.F_pure.witness};
        r.anti_nilpotent_certificate = std::move(c);
    } else if (r.F_injective.status == Tri::False) {
        r.F_anti_nilpotent = {Tri::False, "not F-injective"};
    } else if (r.F_full.status == Tri::False) {
        r.F_anti_nilpotent = {Tri::False, "not F-full"};
    } else {
        for (const auto& e : opt.elements) {
            try {
                if (!regular_element(I, e.value)) continue;
                auto c = deform_certify(data, e.value, target);
                if (!c.proved) continue;
                c.element = e.name;
                r.F_anti_nilpotent = {Tri::True, "deformation along " + e.name};
                r.anti_nilpotent_certificate = std::move(c);
                break;
            } catch (const CapError&) {
            } catch (const PreconditionViolated&) {
            }
        }
    }
    return r;
}

std::vector<std::string> coherence_violations(const ClassificationReport& r) {
    std::vector<std::string> v;
    auto is = [](const Verdict& x, Tri t) { return x.status == t; };
    if (is(r.F_anti_nilpotent, Tri::True) && (is(r.F_injective, Tri::False) || is(r.F_full, Tri::False)))
        v.push_back("F-anti-nilpotent but not F-injective or not F-full");
    if (is(r.F_pure, Tri::True) && !is(r.F_anti_nilpotent, Tri::True)) v.push_back("F-pure but not F-anti-nilpotent");
    if (is(r.F_pure, Tri::True) && is(r.F_injective, Tri::False)) v.push_back("F-pure but not F-injective");
    if (r.is_CM && is(r.F_full, Tri::False)) v.push_back("Cohen-Macaulay but not F-full");
    if (r.strongly_F_injective.status != tri_and(r.F_injective.status, r.F_full.status))
        v.push_back("strongly F-injective differs from F-injective and F-full");
    if (r.is_CM != (r.depth == r.dim)) v.push_back("Cohen-Macaulay flag differs from depth = dim");
    if (r.is_gCM != (r.f_m == r.dim)) v.push_back("generalized Cohen-Macaulay flag differs from f_m = dim");
    if (r.depth > r.f_m || r.f_m > r.dim) v.push_back("depth <= f_m <= dim fails");
    for (const auto& x : r.indices) {
        const std::string at = "i=" + std::to_string(x.i) + ": ";
        if (x.i < r.depth && !x.vanishes) v.push_back(at + "nonzero below the depth");
        if (x.i == r.depth && x.vanishes) v.push_back(at + "zero at the depth");
        if (!x.vanishes && is(x.F_nilpotent, Tri::True) && is(x.F_injective, Tri::True))
            v.push_back(at + "nonzero module with nilpotent and injective Frobenius");
        if (x.vanishes && !(is(x.F_injective, Tri::True) && is(x.F_full, Tri::True)))
            v.push_back(at + "zero module with a failing verdict");
    }
    if (r.is_CM && r.F_injective.status != Tri::Unknown) {
        const auto& top = r.indices.back().F_injective.status;
        if (top != r.F_injective.status) v.push_back("Cohen-Macaulay but F-injective differs from the top index");
    }
    return v;
}

}  // namespace fsing
