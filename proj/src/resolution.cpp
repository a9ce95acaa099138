#include "fsing/resolution.hpp"

#include "fsing/errors.hpp"

namespace fsing {

FreeResolution::FreeResolution(std::vector<FreeModule> modules, std::vector<std::vector<Vector>> maps, bool complete)
    : modules_(std::move(modules)), maps_(std::move(maps)), complete_(complete),
      trackers_(std::make_shared<std::vector<std::unique_ptr<TrackedBasis>>>(modules_.size())) {}

std::vector<std::size_t> FreeResolution::betti() const {
    std::vector<std::size_t> b;
    for (const auto& F : modules_) b.push_back(F.rank());
    return b;
}

bool FreeResolution::is_minimal() const {
    for (std::size_t k = 1; k < maps_.size(); ++k)
        for (const auto& v : maps_[k])
            for (const auto& t : v.terms)
                if (t.m.is_one()) return false;
    return true;
}

bool FreeResolution::squares_to_zero() const {
    for (std::size_t k = 2; k < maps_.size(); ++k)
        for (const auto& v : maps_[k])
            if (!map_apply(modules_[k - 2], maps_[k - 1], v).is_zero()) return false;
    return true;
}

const TrackedBasis& FreeResolution::tracker(std::size_t k) const {
    auto& slot = (*trackers_)[k];
    if (!slot) slot = std::make_unique<TrackedBasis>(modules_[k - 1], maps_[k], modules_[k].basis_degrees());
    return *slot;
}

FreeResolution FreeResolution::frobenius(int e) const {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) q *= modules_[0].R().p();
    std::vector<FreeModule> mods;
    for (const auto& F : modules_) {
        std::vector<std::int64_t> d;
        for (auto x : F.basis_degrees()) d.push_back(x * q);
        mods.emplace_back(F.ring(), d, F.order());
    }
    std::vector<std::vector<Vector>> maps(maps_.size());
    for (std::size_t k = 1; k < maps_.size(); ++k)
        for (const auto& v : maps_[k]) {
            std::vector<VTerm> t;
            for (const auto& x : v.terms) t.push_back({x.m.scaled(static_cast<std::int32_t>(q)), x.deg * q, x.comp, x.c});
            maps[k].push_back(mods[k - 1].canonical(std::move(t)));
        }
    return FreeResolution(std::move(mods), std::move(maps), complete_);
}

FreeResolution minimal_free_resolution(const Presentation& M, std::size_t length_cap) {
    std::vector<FreeModule> mods{M.free()};
    std::vector<std::vector<Vector>> maps(1);
    std::vector<Vector> cur = M.relations().empty() ? std::vector<Vector>{}
                                                    : minimal_generators(M.free(), M.relations());
    bool complete = true;
    while (!cur.empty()) {
        if (mods.size() > length_cap) {
            complete = false;
            break;
        }
        const FreeModule& prev = mods.back();
        std::vector<std::int64_t> deg;
        for (const auto& v : cur) deg.push_back(*prev.degree(v));
        FreeModule Fk(prev.ring(), deg, prev.order());
        auto syz = syzygies(prev, cur, deg);
        std::vector<Vector> next = syz.empty() ? syz : minimal_generators(Fk, syz);
        mods.push_back(Fk);
        maps.push_back(std::move(cur));
        cur = std::move(next);
    }
    return FreeResolution(std::move(mods), std::move(maps), complete);
}

FreeResolution resolve_quotient(const Ideal& I) {
    FreeModule A(I.ring(), {0}, I.order());
    std::vector<Vector> rel;
    for (const auto& g : I.generators()) rel.push_back(A.single(0, g));
    return minimal_free_resolution(Presentation(A, rel), static_cast<std::size_t>(I.ring()->n()) + 1);
}

ChainMap chain_lift(const FreeResolution& source, const FreeResolution& target, std::vector<Vector> phi0) {
    ChainMap phi;
    phi.maps.push_back(std::move(phi0));
    for (std::size_t k = 1; k <= source.length(); ++k) {
        std::vector<Vector> cur;
        for (const auto& dv : source.map(k)) {
            Vector img = map_apply(target.module(k - 1), phi.maps[k - 1], dv);
            if (img.is_zero()) {
                cur.push_back({});
                continue;
            }
            if (k > target.length()) throw LiftFailure("chain_lift: target resolution too short at " + std::to_string(k));
            auto c = target.tracker(k).lift(img);
            if (!c) throw LiftFailure("chain_lift: no lift in homological degree " + std::to_string(k));
            if (!(map_apply(target.module(k - 1), target.map(k), *c) == img))
                throw LiftFailure("chain_lift: square does not commute in degree " + std::to_string(k));
            cur.push_back(std::move(*c));
        }
        phi.maps.push_back(std::move(cur));
    }
    return phi;
}

FreeModule dual_module(const FreeModule& F) {
    std::vector<std::int64_t> d;
    for (auto x : F.basis_degrees()) d.push_back(-x);
    return FreeModule(F.ring(), d, F.order());
}

namespace {

// Transpose of a matrix given by column images: columns of `images` live in a
// module of rank `rows`; the result lists, for each row l, the vector
// sum_i images[i]_l e*_i in `dual`.
std::vector<Vector> transpose(const std::vector<Vector>& images, std::size_t rows, const FreeModule& dual) {
    std::vector<std::vector<VTerm>> out(rows);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (const auto& t : images[i].terms)
            out[t.comp].push_back({t.m, t.deg, static_cast<std::uint32_t>(i), t.c});
    std::vector<Vector> v;
    for (auto& t : out) v.push_back(dual.canonical(std::move(t)));
    return v;
}

}  // namespace

std::vector<Vector> dual_map(const FreeResolution& res, std::size_t k) {
    return transpose(res.map(k), res.module(k - 1).rank(), dual_module(res.module(k)));
}

std::vector<Vector> dual_chain_map(const FreeResolution& source, const FreeResolution& target,
                                   const ChainMap& phi, std::size_t k) {
    std::size_t rows = k <= target.length() ? target.module(k).rank() : 0;
    return transpose(phi.maps[k], rows, dual_module(source.module(k)));
}

Subquotient ext_module(const FreeResolution& res, std::size_t j) {
    if (j > res.length()) {
        FreeModule zero(res.module(0).ring(), {}, res.module(0).order());
        return Subquotient(zero, {}, {});
    }
    FreeModule Fj = dual_module(res.module(j));
    std::vector<Vector> Z;
    if (j == res.length()) {
        for (std::size_t i = 0; i < Fj.rank(); ++i) Z.push_back(Fj.unit(i));
    } else {
        Z = syzygies(dual_module(res.module(j + 1)), dual_map(res, j + 1), Fj.basis_degrees());
    }
    std::vector<Vector> B;
    if (j > 0) B = dual_map(res, j);
    return Subquotient(Fj, Z, B);
}

std::vector<Subquotient> ext_modules(const FreeResolution& res, int n) {
    std::vector<Subquotient> out;
    for (int j = 0; j <= n; ++j) out.push_back(ext_module(res, static_cast<std::size_t>(j)));
    return out;
}

std::size_t projective_dimension(const FreeResolution& res) {
    std::size_t pd = 0;
    for (std::size_t k = 0; k <= res.length(); ++k)
        if (res.module(k).rank() > 0) pd = k;
    return pd;
}

int depth_via_AB(const Ideal& I) {
    if (I.is_unit()) throw UnitIdeal("depth of the zero ring");
    return I.ring()->n() - static_cast<int>(projective_dimension(resolve_quotient(I)));
}

}  // namespace fsing
