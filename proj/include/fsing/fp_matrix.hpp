#pragma once

#include "fsing/prime_field.hpp"

#include <optional>
#include <vector>

namespace fsing {

using FpVector = std::vector<Coeff>;

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(PrimeField F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static FpMatrix identity(PrimeField F, std::size_t n);
    static FpMatrix from_rows(PrimeField F, const std::vector<std::vector<std::int64_t>>& rows);

    const PrimeField& field() const noexcept { return F_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Coeff& at(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
    Coeff at(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }

    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpVector apply(const FpVector& v) const;
    bool is_zero() const noexcept;
    bool operator==(const FpMatrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of {v : Mv = 0}; cols - rank vectors.
    std::vector<FpVector> kernel() const;
    /// Some x with Mx = b, or nullopt when inconsistent.
    std::optional<FpVector> solve(const FpVector& b) const;

private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<Coeff> a_;
};

/// Kernel basis of M (free function form).
inline std::vector<FpVector> mat_kernel(const FpMatrix& M) { return M.kernel(); }

}  // namespace fsing
