#include "fsing/koszul_oracle.hpp"

#include "fsing/errors.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace fsing {

std::vector<Polynomial> system_of_parameters(const Ideal& I, std::uint64_t seed) {
    const RingPtr& R = I.ring();
    const int n = R->n();
    const int k = krull_dim(I);
    if (k == 0) return {};
    // subsets of variables in lexicographic order
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Polynomial> th;
        for (int v : idx) th.push_back(Polynomial::variable(R, v));
        Ideal J = I;
        for (const auto& t : th) J = J.plus(t);
        if (krull_dim(J) == 0) return th;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    std::int64_t L = 1;
    for (auto w : R->weights()) L = std::lcm(L, w);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, R->p() - 1);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Polynomial> th;
        Ideal J = I;
        for (int s = 0; s < k; ++s) {
            std::vector<Term> terms;
            for (int v = 0; v < n; ++v) {
                Monomial m;
                m.e[v] = static_cast<std::int32_t>(L / R->weights()[v]);
                terms.push_back({m, 0, coef(rng)});
            }
            th.push_back(Polynomial::from_terms(R, terms));
            J = J.plus(th.back());
        }
        if (krull_dim(J) == 0) return th;
    }
    throw InternalError("system_of_parameters: no parameters found");
}

namespace {

class KoszulComplex {
public:
    KoszulComplex(Ideal I, std::vector<Polynomial> theta) : I_(std::move(I)), th_(std::move(theta)) {
        k_ = static_cast<int>(th_.size());
        for (const auto& t : th_) deg_.push_back(*weighted_degree(t));
        leads_ = I_.lead_monomials();
        for (unsigned S = 0; S < (1u << k_); ++S) subsets_[std::popcount(S)].push_back(S);
    }

    const Ideal& ideal() const { return I_; }
    int k() const { return k_; }
    const std::vector<unsigned>& subsets(int i) const {
        static const std::vector<unsigned> none;
        auto it = subsets_.find(i);
        return it == subsets_.end() ? none : it->second;
    }
    std::int64_t shift(unsigned S) const {
        std::int64_t s = 0;
        for (int j = 0; j < k_; ++j)
            if (S >> j & 1) s += deg_[j];
        return s;
    }
    const Polynomial& theta(int j) const { return th_[j]; }

    struct Basis {
        std::vector<Monomial> mons;
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    };
    const Basis& basis(std::int64_t e) {
        auto it = bases_.find(e);
        if (it != bases_.end()) return it->second;
        Basis B;
        if (e >= 0) B.mons = standard_monomials(*I_.ring(), leads_, e);
        for (std::size_t a = 0; a < B.mons.size(); ++a) B.index[B.mons[a]] = a;
        return bases_.emplace(e, std::move(B)).first->second;
    }
    /// Writes the coordinates of NF(f) (degree e) into out[offset..].
    void write(const Polynomial& f, std::int64_t e, FpVector& out, std::size_t offset) {
        const Basis& B = basis(e);
        const Polynomial r = I_.normal_form(f);
        for (const auto& t : r.terms()) out[offset + B.index.at(t.m)] = t.c;
    }

    /// Stage t cochain space K^i_d: offsets of the blocks, in subsets(i) order.
    std::vector<std::size_t> offsets(int t, int i, std::int64_t d) {
        std::vector<std::size_t> off{0};
        for (unsigned S : subsets(i)) off.push_back(off.back() + basis(d + t * shift(S)).mons.size());
        return off;
    }

    FpMatrix differential(int t, int i, std::int64_t d) {
        auto src = offsets(t, i, d), dst = offsets(t, i + 1, d);
        FpMatrix M(I_.ring()->field(), dst.back(), src.back());
        const auto& S_list = subsets(i);
        const auto& T_list = subsets(i + 1);
        for (std::size_t a = 0; a < S_list.size(); ++a) {
            unsigned S = S_list[a];
            const Basis& B = basis(d + t * shift(S));
            for (int j = 0; j < k_; ++j) {
                if (S >> j & 1) continue;
                unsigned T = S | (1u << j);
                std::size_t b = std::find(T_list.begin(), T_list.end(), T) - T_list.begin();
                int below = std::popcount(S & ((1u << j) - 1));
                Polynomial g = th_[j].pow(static_cast<std::uint64_t>(t));
                if (below % 2) g = -g;
                std::int64_t e = d + t * shift(T);
                for (std::size_t c = 0; c < B.mons.size(); ++c) {
                    FpVector col(dst.back(), 0);
                    write(g.times_monomial(B.mons[c]), e, col, dst[b]);
                    for (std::size_t r = dst[b]; r < dst[b + 1]; ++r)
                        if (col[r]) M.at(r, src[a] + c) = col[r];
                }
            }
        }
        return M;
    }

    struct Cohomology {
        std::size_t ambient = 0;
        std::vector<FpVector> reps;
        std::vector<FpVector> boundaries;  // spanning set of B
    };
    const Cohomology& cohomology(int t, int i, std::int64_t d) {
        auto key = std::make_tuple(t, i, d);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Cohomology H;
        H.ambient = offsets(t, i, d).back();
        auto Z = i < k_ ? differential(t, i, d).kernel() : std::vector<FpVector>{};
        if (i == k_)
            for (std::size_t r = 0; r < H.ambient; ++r) {
                FpVector e(H.ambient, 0);
                e[r] = 1;
                Z.push_back(e);
            }
        if (i > 0) {
            FpMatrix Bm = differential(t, i - 1, d);
            for (std::size_t c = 0; c < Bm.cols(); ++c) {
                FpVector v(Bm.rows());
                for (std::size_t r = 0; r < Bm.rows(); ++r) v[r] = Bm.at(r, c);
                H.boundaries.push_back(v);
            }
        }
        std::size_t rank = span_rank(H.boundaries, H.ambient);
        std::vector<FpVector> acc = H.boundaries;
        for (const auto& z : Z) {
            acc.push_back(z);
            std::size_t r2 = span_rank(acc, H.ambient);
            if (r2 > rank) {
                H.reps.push_back(z);
                rank = r2;
            } else {
                acc.pop_back();
            }
        }
        return cache_.emplace(key, std::move(H)).first->second;
    }

    /// Coordinates of a cocycle in the chosen basis of cohomology.
    FpVector coordinates(const Cohomology& H, const FpVector& v) {
        const PrimeField& F = I_.ring()->field();
        FpMatrix M(F, H.ambient, H.boundaries.size() + H.reps.size());
        for (std::size_t c = 0; c < H.boundaries.size(); ++c)
            for (std::size_t r = 0; r < H.ambient; ++r) M.at(r, c) = H.boundaries[c][r];
        for (std::size_t c = 0; c < H.reps.size(); ++c)
            for (std::size_t r = 0; r < H.ambient; ++r) M.at(r, H.boundaries.size() + c) = H.reps[c][r];
        auto x = M.solve(v);
        if (!x) throw InternalError("koszul: image is not a cocycle");
        return FpVector(x->begin() + static_cast<std::ptrdiff_t>(H.boundaries.size()), x->end());
    }

private:
    std::size_t span_rank(const std::vector<FpVector>& vs, std::size_t dim) const {
        FpMatrix M(I_.ring()->field(), vs.size(), dim);
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) M.at(r, c) = vs[r][c];
        return M.rank();
    }

    Ideal I_;
    std::vector<Polynomial> th_;
    std::vector<std::int64_t> deg_;
    int k_ = 0;
    std::vector<Monomial> leads_;
    std::map<int, std::vector<unsigned>> subsets_;
    std::map<std::int64_t, Basis> bases_;
    std::map<std::tuple<int, int, std::int64_t>, Cohomology> cache_;
};

// Matrix of the map induced on cohomology by a blockwise map of cochains:
// block S of source (X, tx, dx) goes to block S of target (Y, ty, dy), the basis
// monomial m of the block being sent to image(S, m) (reduced in Y).
FpMatrix induced(KoszulComplex& X, int tx, std::int64_t dx, KoszulComplex& Y, int ty, std::int64_t dy, int i,
                 const std::function<Polynomial(unsigned, const Monomial&)>& image) {
    const auto& HX = X.cohomology(tx, i, dx);
    const auto& HY = Y.cohomology(ty, i, dy);
    auto srcoff = X.offsets(tx, i, dx), dstoff = Y.offsets(ty, i, dy);
    const auto& subs = X.subsets(i);
    FpMatrix M(X.ideal().ring()->field(), HY.reps.size(), HX.reps.size());
    const PrimeField& F = X.ideal().ring()->field();
    for (std::size_t c = 0; c < HX.reps.size(); ++c) {
        FpVector out(HY.ambient, 0);
        for (std::size_t a = 0; a < subs.size(); ++a) {
            unsigned S = subs[a];
            const auto& B = X.basis(dx + tx * X.shift(S));
            std::vector<Term> terms;
            for (std::size_t q = 0; q < B.mons.size(); ++q) {
                Coeff lam = HX.reps[c][srcoff[a] + q];
                if (!lam) continue;
                const Polynomial img = image(S, B.mons[q]);
                for (const auto& t : img.terms()) terms.push_back({t.m, 0, F.mul(lam, t.c)});
            }
            Y.write(Polynomial::from_terms(X.ideal().ring(), terms), dy + ty * Y.shift(S), out, dstoff[a]);
        }
        auto col = Y.coordinates(HY, out);
        for (std::size_t r = 0; r < col.size(); ++r) M.at(r, c) = col[r];
    }
    return M;
}

Polynomial theta_product(const KoszulComplex& K, unsigned S) {
    Polynomial g = Polynomial::constant(K.ideal().ring(), 1);
    for (int j = 0; j < K.k(); ++j)
        if (S >> j & 1) g = g * K.theta(j);
    return g;
}

bool transition_iso(KoszulComplex& K, int t, int i, std::int64_t d) {
    auto M = induced(K, t, d, K, t + 1, d, i, [&](unsigned S, const Monomial& m) {
        return theta_product(K, S).times_monomial(m);
    });
    return M.rows() == M.cols() && M.rank() == M.cols();
}

int stable_stage(KoszulComplex& K, int i, const std::vector<std::int64_t>& degrees, int max_stage) {
    for (int t = 1; t + 2 <= max_stage; ++t) {
        bool ok = true;
        for (auto d : degrees)
            if (!transition_iso(K, t, i, d) || !transition_iso(K, t + 1, i, d)) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    throw NotStabilized("koszul oracle: no stable stage up to " + std::to_string(max_stage));
}

std::vector<std::int64_t> window_degrees(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = lo; d <= hi; ++d) ds.push_back(d);
    return ds;
}

}  // namespace

KoszulResult koszul_oracle(const Ideal& I, int i, std::int64_t lo, std::int64_t hi, KoszulOptions opt) {
    if (opt.sop.empty()) opt.sop = system_of_parameters(I);
    KoszulComplex K(I, opt.sop);
    const auto p = static_cast<std::int64_t>(I.ring()->p());
    KoszulResult res;
    res.i = i;
    res.lo = lo;
    res.hi = hi;
    res.sop = opt.sop;
    if (i < 0 || i > K.k()) {
        for (std::int64_t d = lo; d <= hi; ++d) {
            res.dims.push_back(0);
            res.frobenius.emplace_back(I.ring()->field(), 0, 0);
        }
        return res;
    }
    // Frobenius targets outside the window are only needed where H_d is nonzero
    auto ds = window_degrees(lo, hi);
    int t = stable_stage(K, i, ds, opt.max_stage);
    std::vector<std::int64_t> extra;
    for (std::int64_t d = lo; d <= hi; ++d)
        if ((p * d < lo || p * d > hi) && !K.cohomology(t, i, d).reps.empty()) extra.push_back(p * d);
    if (!extra.empty()) {
        ds.insert(ds.end(), extra.begin(), extra.end());
        t = stable_stage(K, i, ds, opt.max_stage);
    }
    res.stage = t;
    const int tp = t * static_cast<int>(p);
    for (std::int64_t d = lo; d <= hi; ++d) {
        const auto dim = static_cast<std::int64_t>(K.cohomology(t, i, d).reps.size());
        res.dims.push_back(dim);
        if (dim == 0) {
            res.frobenius.emplace_back(I.ring()->field(), 0, 0);
            continue;
        }
        res.frobenius.push_back(induced(K, t, d, K, tp, p * d, i, [&](unsigned, const Monomial& m) {
            return Polynomial::monomial(I.ring(), m.scaled(static_cast<std::int32_t>(p)));
        }));
    }
    return res;
}

std::vector<FpMatrix> koszul_comparison(const Ideal& I, int i, std::int64_t lo, std::int64_t hi, KoszulOptions opt) {
    if (opt.sop.empty()) opt.sop = system_of_parameters(I);
    KoszulComplex K(I, opt.sop);
    KoszulComplex Kp(bracket_power(I, 1), opt.sop);
    std::vector<std::int64_t> ds;
    for (std::int64_t d = lo; d <= hi; ++d) ds.push_back(d);
    const int t = std::max(stable_stage(K, i, ds, opt.max_stage), stable_stage(Kp, i, ds, opt.max_stage));
    std::vector<FpMatrix> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        out.push_back(induced(Kp, t, d, K, t, d, i, [&](unsigned, const Monomial& m) {
            return Polynomial::monomial(I.ring(), m);
        }));
    return out;
}

}  // namespace fsing
