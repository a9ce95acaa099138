#pragma once

#include "fsing/cartier.hpp"
#include "fsing/fp_matrix.hpp"

#include <vector>

namespace fsing {

/// Graded pieces H^i_m(A/I)_d for d in [lo, hi] with the Frobenius matrices H_d -> H_pd.
struct HWindow {
    int i = 0;
    std::int64_t lo = 0, hi = -1;
    std::vector<std::int64_t> dims;       // index d - lo
    std::vector<FpMatrix> frobenius;      // index d - lo; dim H_pd x dim H_d
    std::vector<std::int64_t> socle_degrees;

    std::int64_t dim(std::int64_t d) const { return dims.at(static_cast<std::size_t>(d - lo)); }
    const FpMatrix& frobenius_at(std::int64_t d) const { return frobenius.at(static_cast<std::size_t>(d - lo)); }
    std::int64_t total() const;
};

/// Via H^i_m(R)_d = (Ext^{n-i}(R, A)_{-d-D})^*; Frobenius matrices are transposes of
/// Theta slices. Throws WindowTooSmall when a socle degree falls outside the window.
HWindow materialize_H(const CartierOperator& T, std::int64_t lo, std::int64_t hi);
HWindow materialize_H(const std::shared_ptr<const ExtFrobenius>& data, int i, std::int64_t lo, std::int64_t hi);

/// Matrix of Theta : N_e -> N_{e'} in the standard bases (e' = image degree of e).
FpMatrix theta_slice(const CartierOperator& T, std::int64_t e);

}  // namespace fsing
