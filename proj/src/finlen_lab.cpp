#include "fsing/finlen/lab.hpp"

namespace fsing::finlen {

namespace {

using FF = FiniteField;

Mat<FF> from_mask(std::size_t m, std::uint32_t mask) {
    Mat<FF> A(m, Vec<FF>(m, 0));
    for (std::size_t i = 0; i < m * m; ++i) A[i / m][i % m] = mask >> i & 1;
    return A;
}

bool is_zero(const Mat<FF>& A) {
    for (const auto& c : A)
        for (auto x : c)
            if (x) return false;
    return true;
}

}  // namespace

LabTally exhaustive_f2(std::size_t max_dim) {
    FF K(2, 1);
    LabTally t;
    for (std::size_t m = 1; m <= max_dim; ++m) {
        const std::uint32_t masks = 1u << (m * m);
        for (std::uint32_t xmask = 0; xmask < masks; ++xmask) {
            auto X = from_mask(m, xmask);
            auto P = X;
            for (std::size_t k = 1; k < m; ++k) P = mat_mul(K, P, X);
            if (!is_zero(P)) continue;
            // over F_2 the entrywise square of X is X itself
            auto X2 = mat_mul(K, X, X);
            for (std::uint32_t fmask = 0; fmask < masks; ++fmask) {
                auto F = from_mask(m, fmask);
                if (mat_mul(K, F, X) != mat_mul(K, X2, F)) continue;
                FinLenModule<FF> M{K, m, {X}, F};
                ++t.checked;
                const bool a = anti_nilpotent_by_quotients(M).value;
                if (a != anti_nilpotent_by_fullness(M).value || (a && !frobenius_injective(M))) ++t.discrepancies;
            }
        }
    }
    return t;
}

LabTally perfect_quotients(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LabTally t;
    for (std::size_t k = 0; k < count; ++k) {
        FF K(k % 2 ? 3 : 2, 1 + static_cast<std::uint32_t>(k % 3));
        auto M = random_injective_module(K, 1 + rng() % 4, rng);
        Vec<FF> v(M.m);
        for (auto& x : v) x = K.random(rng);
        ++t.checked;
        if (!stable_quotient_injective(M, fstable_closure(M, {v}))) ++t.discrepancies;
    }
    return t;
}

bool nonperfect_counterexample(std::uint32_t p) {
    RationalFunctionField K(p);
    FinLenModule<RationalFunctionField> M{K, 2, {}, {{K.one(), K.zero()}, {K.t(), K.zero()}}};
    Subspace<RationalFunctionField> L(K, 2);
    L.add(M.unit(0));
    return frobenius_injective(M) && fstable_closure(M, L.basis()) == L && !stable_quotient_injective(M, L);
}

}  // namespace fsing::finlen
