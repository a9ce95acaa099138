#include "fsing/oracle_check.hpp"

#include "fsing/errors.hpp"

#include <algorithm>

namespace fsing {

namespace {

template <class W>
std::vector<std::size_t> iterated_ranks(const W& w, std::int64_t d, std::int64_t p) {
    std::vector<std::size_t> out;
    if (w.dim(d) == 0) return out;
    std::optional<FpMatrix> acc;
    std::int64_t cur = d;
    for (std::int64_t k = 0; k < std::max<std::int64_t>(1, w.dim(d)); ++k) {
        const FpMatrix& F = w.frobenius_at(cur);
        acc = acc ? F * *acc : F;
        out.push_back(acc->rank());
        const std::int64_t next = p * cur;
        if (next < w.lo || next > w.hi || out.back() == 0) break;
        cur = next;
    }
    return out;
}

}  // namespace

bool OracleComparison::agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const OracleRow& r) { return r.agree(); });
}

std::pair<std::int64_t, std::int64_t> support_window(const ExtFrobenius& data, int i, std::int64_t margin) {
    const Subquotient& N = data.ext(data.n() - i);
    if (N.generators().empty() || N.module().is_zero()) return {0, 0};
    if (!finite_length(N.module()))
        throw PreconditionViolated("H^" + std::to_string(i) + " does not have finite length");
    const std::int64_t D = data.ideal().ring()->total_weight();
    auto degs = N.module().support_degrees();
    auto [mn, mx] = std::minmax_element(degs.begin(), degs.end());
    return {-*mx - D - margin, -*mn - D + margin};
}

OracleComparison oracle_check(const std::shared_ptr<const ExtFrobenius>& data, int i, std::int64_t lo,
                              std::int64_t hi, KoszulOptions opt) {
    HWindow H = materialize_H(data, i, lo, hi);
    KoszulResult K = koszul_oracle(data->ideal(), i, lo, hi, std::move(opt));
    const std::int64_t p = data->ideal().ring()->p();
    OracleComparison c;
    c.i = i;
    c.lo = lo;
    c.hi = hi;
    c.stage = K.stage;
    c.socle_degrees = H.socle_degrees;
    for (std::int64_t d = lo; d <= hi; ++d) {
        OracleRow r;
        r.d = d;
        r.dim_duality = H.dim(d);
        r.dim_koszul = K.dim(d);
        r.ranks_duality = iterated_ranks(H, d, p);
        r.ranks_koszul = iterated_ranks(K, d, p);
        c.rows.push_back(std::move(r));
    }
    return c;
}

}  // namespace fsing
