#include "fsing/fp_matrix.hpp"

namespace fsing {

FpMatrix FpMatrix::identity(PrimeField F, std::size_t n) {
    FpMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % F.p();
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField F, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(F, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.from_int(rows[i][j]);
    return m;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    FpMatrix r(F_, rows_, o.cols_);
    const std::uint64_t p = F_.p();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = static_cast<Coeff>((r.at(i, j) + a * o.at(k, j)) % p);
        }
    return r;
}

FpVector FpMatrix::apply(const FpVector& v) const {
    FpVector r(rows_, 0);
    const std::uint64_t p = F_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s = (s + static_cast<std::uint64_t>(at(i, j)) * v[j]) % p;
        r[i] = static_cast<Coeff>(s);
    }
    return r;
}

bool FpMatrix::is_zero() const noexcept {
    for (auto v : a_)
        if (v) return false;
    return true;
}

std::vector<std::size_t> FpMatrix::rref() {
    std::vector<std::size_t> pivots;
    const std::uint64_t p = F_.p();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
        Coeff inv = F_.inv(at(r, c));
        for (std::size_t j = c; j < cols_; ++j) at(r, j) = F_.mul(at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            std::uint64_t f = p - at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (at(r, j)) at(i, j) = static_cast<Coeff>((at(i, j) + f * at(r, j)) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t FpMatrix::rank() const {
    FpMatrix m(*this);
    return m.rref().size();
}

std::vector<FpVector> FpMatrix::kernel() const {
    FpMatrix m(*this);
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<FpVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        FpVector v(cols_, 0);
        v[f] = 1 % F_.p();
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F_.neg(m.at(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVector> FpMatrix::solve(const FpVector& b) const {
    FpMatrix aug(F_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    FpVector x(cols_, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, cols_);
    return x;
}

}  // namespace fsing
