#pragma once

#include "fsing/finlen/frobenius_module.hpp"

#include <random>

namespace fsing::finlen {

/// Random strictly upper triangular (hence nilpotent) matrix.
inline Mat<FiniteField> random_nilpotent(const FiniteField& K, std::size_t m, std::mt19937_64& rng) {
    Mat<FiniteField> X(m, Vec<FiniteField>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) X[i][j] = K.random(rng);
    return X;
}

inline Mat<FiniteField> mat_mul(const FiniteField& K, const Mat<FiniteField>& A, const Mat<FiniteField>& B) {
    // column-major: (AB) e_i = A (B e_i)
    const std::size_t m = A.size();
    Mat<FiniteField> C(m, Vec<FiniteField>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (!B[i][k]) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] = K.add(C[i][j], K.mul(B[i][k], A[k][j]));
        }
    return C;
}

/// Frobenius matrices Fm compatible with the action X, i.e. F(Xv) = X^p F(v):
/// Fm * X^(p) = X^p * Fm with X^(p) the entrywise p-th power. Returns a random
/// element of that solution space.
inline Mat<FiniteField> random_compatible_frobenius(const FiniteField& K, const Mat<FiniteField>& X,
                                                    std::mt19937_64& rng) {
    const std::size_t m = X.size();
    Mat<FiniteField> Xp = X, Xpow;
    for (auto& c : Xp)
        for (auto& x : c) x = K.frob(x);
    Xpow = X;
    for (std::uint32_t k = 1; k < K.p(); ++k) Xpow = mat_mul(K, Xpow, X);
    // unknowns Fm[i][j] (column i, row j) indexed i*m + j; equations per entry (col c, row r)
    const std::size_t nv = m * m;
    std::vector<Vec<FiniteField>> eq;
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < m; ++r) {
            Vec<FiniteField> row(nv, 0);
            // (Fm Xp)[r][c] = sum_k Fm[k][r] * Xp[c][k]
            for (std::size_t k = 0; k < m; ++k) row[k * m + r] = K.add(row[k * m + r], Xp[c][k]);
            // (Xpow Fm)[r][c] = sum_k Xpow[k][r] * Fm[c][k]
            for (std::size_t k = 0; k < m; ++k) row[c * m + k] = K.sub(row[c * m + k], Xpow[k][r]);
            eq.push_back(row);
        }
    // row reduce, then pick random free variables
    std::vector<std::size_t> piv;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < nv && rk < eq.size(); ++c) {
        std::size_t s = rk;
        while (s < eq.size() && !eq[s][c]) ++s;
        if (s == eq.size()) continue;
        std::swap(eq[s], eq[rk]);
        auto inv = K.inv(eq[rk][c]);
        for (auto& x : eq[rk]) x = K.mul(x, inv);
        for (std::size_t o = 0; o < eq.size(); ++o) {
            if (o == rk || !eq[o][c]) continue;
            auto f = eq[o][c];
            for (std::size_t j = 0; j < nv; ++j) eq[o][j] = K.sub(eq[o][j], K.mul(f, eq[rk][j]));
        }
        piv.push_back(c);
        ++rk;
    }
    Vec<FiniteField> sol(nv, 0);
    for (std::size_t c = 0; c < nv; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) sol[c] = K.random(rng);
    for (std::size_t k = 0; k < piv.size(); ++k) {
        FiniteField::Elem s = 0;
        for (std::size_t c = 0; c < nv; ++c)
            if (c != piv[k]) s = K.add(s, K.mul(eq[k][c], sol[c]));
        sol[piv[k]] = K.neg(s);
    }
    Mat<FiniteField> Fm(m, Vec<FiniteField>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) Fm[i][j] = sol[i * m + j];
    return Fm;
}

/// Random module of dimension m with one nilpotent action and a compatible Frobenius.
inline FinLenModule<FiniteField> random_module(const FiniteField& K, std::size_t m, std::mt19937_64& rng) {
    FinLenModule<FiniteField> M{K, m, {}, {}};
    auto X = random_nilpotent(K, m, rng);
    M.actions.push_back(X);
    M.F = random_compatible_frobenius(K, X, rng);
    return M;
}

/// Random module with trivial ring action and invertible Frobenius matrix.
inline FinLenModule<FiniteField> random_injective_module(const FiniteField& K, std::size_t m, std::mt19937_64& rng) {
    FinLenModule<FiniteField> M{K, m, {}, {}};
    while (true) {
        M.F.assign(m, Vec<FiniteField>(m, 0));
        Subspace<FiniteField> S(K, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) M.F[i][j] = K.random(rng);
        for (const auto& c : M.F) S.add(c);
        if (S.dim() == m) return M;
    }
}

}  // namespace fsing::finlen
