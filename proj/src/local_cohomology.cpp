#include "fsing/local_cohomology.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <set>

namespace fsing {

std::int64_t HWindow::total() const {
    std::int64_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

FpMatrix theta_slice(const CartierOperator& T, std::int64_t e) {
    const Presentation& N = T.module();
    const FreeModule& F = N.free();
    auto src = N.basis(e);
    auto e2 = T.image_degree(e);
    std::size_t rows = e2 ? N.basis(*e2).size() : 0;
    FpMatrix M(F.R().field(), rows, src.size());
    if (!e2) return M;
    for (std::size_t k = 0; k < src.size(); ++k) {
        const auto& [c, m] = src[k];
        Vector v = F.times_monomial(F.unit(c), m);
        auto col = N.coordinates(T.apply(v), *e2);
        for (std::size_t r = 0; r < rows; ++r) M.at(r, k) = col[r];
    }
    return M;
}

HWindow materialize_H(const CartierOperator& T, std::int64_t lo, std::int64_t hi) {
    const Presentation& N = T.module();
    const PolyRing& R = *N.ring();
    const std::int64_t D = R.total_weight();
    const auto p = static_cast<std::int64_t>(R.p());
    HWindow H;
    H.i = R.n() - T.j();
    H.lo = lo;
    H.hi = hi;
    std::set<std::int64_t> soc;
    for (auto g : N.degrees()) soc.insert(-g - D);
    H.socle_degrees.assign(soc.begin(), soc.end());
    for (auto s : H.socle_degrees)
        if (s < lo || s > hi)
            throw WindowTooSmall("socle degree " + std::to_string(s) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    for (std::int64_t d = lo; d <= hi; ++d) {
        H.dims.push_back(N.dim(-d - D));
        H.frobenius.push_back(theta_slice(T, -p * d - D).transpose());
    }
    return H;
}

HWindow materialize_H(const std::shared_ptr<const ExtFrobenius>& data, int i, std::int64_t lo, std::int64_t hi) {
    return materialize_H(CartierOperator(data, data->n() - i), lo, hi);
}

}  // namespace fsing
