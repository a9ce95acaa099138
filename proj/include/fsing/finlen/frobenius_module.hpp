#pragma once

#include "fsing/errors.hpp"
#include "fsing/finlen/fields.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace fsing::finlen {

template <class K>
using Vec = std::vector<typename K::Elem>;

/// Column-major: cols[i] is the image of the i-th basis vector.
template <class K>
using Mat = std::vector<Vec<K>>;

/// Subspace of K^m kept in reduced row echelon form.
template <class K>
class Subspace {
public:
    Subspace(const K& field, std::size_t m) : K_(&field), m_(m) {}

    std::size_t ambient() const noexcept { return m_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vec<K>>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return piv_; }

    /// v minus its projection along the pivots; zero iff v lies in the subspace.
    Vec<K> reduce(Vec<K> v) const {
        const K& F = *K_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto c = v[piv_[r]];
            if (F.is_zero(c)) continue;
            for (std::size_t j = 0; j < m_; ++j) v[j] = F.sub(v[j], F.mul(c, rows_[r][j]));
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }
    bool contains(const Subspace& o) const {
        for (const auto& b : o.rows_)
            if (!contains(b)) return false;
        return true;
    }
    bool operator==(const Subspace& o) const { return dim() == o.dim() && contains(o); }

    /// Adds v; returns true when the dimension grew.
    bool add(Vec<K> v) {
        const K& F = *K_;
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < m_ && F.is_zero(v[p])) ++p;
        if (p == m_) return false;
        auto inv = F.inv(v[p]);
        for (auto& x : v) x = F.mul(x, inv);
        for (auto& row : rows_) {
            auto c = row[p];
            if (F.is_zero(c)) continue;
            for (std::size_t j = 0; j < m_; ++j) row[j] = F.sub(row[j], F.mul(c, v[j]));
        }
        auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
        piv_.insert(piv_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }
    void add(const Subspace& o) {
        for (const auto& b : o.rows_) add(b);
    }

    bool is_zero_vec(const Vec<K>& v) const {
        return std::all_of(v.begin(), v.end(), [&](const auto& x) { return K_->is_zero(x); });
    }

private:
    const K* K_;
    std::size_t m_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> piv_;
};

/// Finite-dimensional module over a field with commuting nilpotent ring actions
/// and a p-linear Frobenius F(sum l_i b_i) = sum l_i^p F(b_i).
template <class K>
struct FinLenModule {
    K field;
    std::size_t m = 0;
    std::vector<Mat<K>> actions;
    Mat<K> F;

    Vec<K> zero_vec() const { return Vec<K>(m, field.zero()); }
    Vec<K> unit(std::size_t i) const {
        auto v = zero_vec();
        v[i] = field.one();
        return v;
    }
    Vec<K> apply_linear(const Mat<K>& X, const Vec<K>& v) const {
        auto out = zero_vec();
        for (std::size_t i = 0; i < m; ++i) {
            if (field.is_zero(v[i])) continue;
            for (std::size_t j = 0; j < m; ++j) out[j] = field.add(out[j], field.mul(v[i], X[i][j]));
        }
        return out;
    }
    Vec<K> apply_F(const Vec<K>& v) const {
        auto out = zero_vec();
        for (std::size_t i = 0; i < m; ++i) {
            if (field.is_zero(v[i])) continue;
            auto c = field.frob(v[i]);
            for (std::size_t j = 0; j < m; ++j) out[j] = field.add(out[j], field.mul(c, F[i][j]));
        }
        return out;
    }
    Subspace<K> empty() const { return Subspace<K>(field, m); }
    Subspace<K> whole() const {
        auto S = empty();
        for (std::size_t i = 0; i < m; ++i) S.add(unit(i));
        return S;
    }
};

/// Smallest subspace containing S and stable under the ring actions and F.
template <class K>
Subspace<K> fstable_closure(const FinLenModule<K>& M, const std::vector<Vec<K>>& S) {
    auto W = M.empty();
    std::vector<Vec<K>> todo = S;
    while (!todo.empty()) {
        Vec<K> v = std::move(todo.back());
        todo.pop_back();
        if (!W.add(v)) continue;
        for (const auto& X : M.actions) todo.push_back(M.apply_linear(X, v));
        todo.push_back(M.apply_F(v));
    }
    return W;
}

/// Smallest ring-stable subspace containing S.
template <class K>
Subspace<K> ring_span(const FinLenModule<K>& M, const std::vector<Vec<K>>& S) {
    auto W = M.empty();
    std::vector<Vec<K>> todo = S;
    while (!todo.empty()) {
        Vec<K> v = std::move(todo.back());
        todo.pop_back();
        if (!W.add(v)) continue;
        for (const auto& X : M.actions) todo.push_back(M.apply_linear(X, v));
    }
    return W;
}

/// N' = R-span of F(N).
template <class K>
Subspace<K> r_span_of_F(const FinLenModule<K>& M, const Subspace<K>& N) {
    std::vector<Vec<K>> img;
    for (const auto& b : N.basis()) img.push_back(M.apply_F(b));
    return ring_span(M, img);
}

template <class K>
bool is_full(const FinLenModule<K>& M, const Subspace<K>& N) {
    return r_span_of_F(M, N) == N;
}

/// {v : F(v) in N}, computed through the expansion over the basis of K over K^p.
template <class K>
Subspace<K> frobenius_preimage(const FinLenModule<K>& M, const Subspace<K>& N) {
    const K& F = M.field;
    const std::size_t b = F.root_basis_size();
    // Column i of the expanded system: roots of the coordinates of F(e_i) mod N.
    std::vector<Vec<K>> cols;
    for (std::size_t i = 0; i < M.m; ++i) {
        auto w = N.reduce(M.apply_F(M.unit(i)));
        Vec<K> c(M.m * b, F.zero());
        for (std::size_t j = 0; j < M.m; ++j) {
            auto r = F.root_expand(w[j]);
            for (std::size_t k = 0; k < b; ++k) c[j * b + k] = r[k];
        }
        cols.push_back(std::move(c));
    }
    // kernel of the (m*b) x m matrix with these columns
    const std::size_t rows = M.m * b;
    std::vector<Vec<K>> A(rows, Vec<K>(M.m, F.zero()));
    for (std::size_t i = 0; i < M.m; ++i)
        for (std::size_t r = 0; r < rows; ++r) A[r][i] = cols[i][r];
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.m && r < rows; ++c) {
        std::size_t s = r;
        while (s < rows && F.is_zero(A[s][c])) ++s;
        if (s == rows) continue;
        std::swap(A[s], A[r]);
        auto inv = F.inv(A[r][c]);
        for (auto& x : A[r]) x = F.mul(x, inv);
        for (std::size_t o = 0; o < rows; ++o) {
            if (o == r || F.is_zero(A[o][c])) continue;
            auto f = A[o][c];
            for (std::size_t j = 0; j < M.m; ++j) A[o][j] = F.sub(A[o][j], F.mul(f, A[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    auto P = M.empty();
    for (std::size_t c = 0; c < M.m; ++c) {
        if (std::find(piv.begin(), piv.end(), c) != piv.end()) continue;
        auto v = M.zero_vec();
        v[c] = F.one();
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F.neg(A[k][c]);
        P.add(v);
    }
    return P;
}

/// The induced action on M/N is injective.
template <class K>
bool quotient_injective(const FinLenModule<K>& M, const Subspace<K>& N) {
    return N.contains(frobenius_preimage(M, N));
}

template <class K>
bool frobenius_injective(const FinLenModule<K>& M) {
    return quotient_injective(M, M.empty());
}

/// Union of ker F^e.
template <class K>
Subspace<K> nilpotent_part(const FinLenModule<K>& M) {
    auto Kcur = M.empty();
    while (true) {
        auto next = frobenius_preimage(M, Kcur);
        if (next.dim() == Kcur.dim()) return Kcur;
        Kcur = std::move(next);
    }
}

struct EnumerationCap {
    std::size_t max_vectors = 64;  // cap on |K^m| for exhaustive enumeration
};

/// Every F-stable submodule (finite fields only). Throws DimensionCapExceeded.
template <class K>
std::vector<Subspace<K>> fstable_submodules(const FinLenModule<K>& M, EnumerationCap cap = {}) {
    const auto elems = M.field.elements();
    std::size_t total = 1;
    for (std::size_t i = 0; i < M.m; ++i) {
        total *= elems.size();
        if (total > cap.max_vectors)
            throw DimensionCapExceeded("enumeration of " + std::to_string(elems.size()) + "^" + std::to_string(M.m) +
                                       " vectors exceeds the cap");
    }
    auto key = [](const Subspace<K>& S) { return S.basis(); };
    std::map<std::vector<Vec<K>>, Subspace<K>> found;
    found.emplace(key(M.empty()), M.empty());
    std::vector<Subspace<K>> cyclic;
    Vec<K> v(M.m, M.field.zero());
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (std::size_t i = 0; i < M.m; ++i, x /= elems.size()) v[i] = elems[x % elems.size()];
        auto C = fstable_closure(M, {v});
        if (found.emplace(key(C), C).second) cyclic.push_back(C);
    }
    // close under sums
    std::vector<Subspace<K>> all;
    for (auto& [k, S] : found) all.push_back(S);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& C : cyclic) {
            auto S = all[i];
            S.add(C);
            if (found.emplace(key(S), S).second) all.push_back(S);
        }
    return all;
}

template <class K>
struct AntiNilpotentVerdict {
    bool value = true;
    std::optional<Subspace<K>> witness;  // F-stable N violating the property
};

/// Every F-stable N has injective quotient action.
template <class K>
AntiNilpotentVerdict<K> anti_nilpotent_by_quotients(const FinLenModule<K>& M, EnumerationCap cap = {}) {
    for (const auto& N : fstable_submodules(M, cap))
        if (!quotient_injective(M, N)) return {false, N};
    return {};
}

/// Every F-stable N is full.
template <class K>
AntiNilpotentVerdict<K> anti_nilpotent_by_fullness(const FinLenModule<K>& M, EnumerationCap cap = {}) {
    for (const auto& N : fstable_submodules(M, cap))
        if (!is_full(M, N)) return {false, N};
    return {};
}

/// L = x^n N for the first n with x^{n+1} N = x^n N.
template <class K>
Subspace<K> intersect_xL(const FinLenModule<K>& M, const Subspace<K>& N, std::size_t x) {
    auto W = N;
    while (true) {
        std::vector<Vec<K>> img;
        for (const auto& b : W.basis()) img.push_back(M.apply_linear(M.actions[x], b));
        auto next = M.empty();
        for (auto& v : img) next.add(v);
        if (next.dim() == W.dim()) return W;
        W = std::move(next);
    }
}

/// Whether F on M/L is injective, for F injective on M. Throws PreconditionViolated.
template <class K>
bool stable_quotient_injective(const FinLenModule<K>& M, const Subspace<K>& L) {
    if (!frobenius_injective(M)) throw PreconditionViolated("Frobenius is not injective on M");
    return quotient_injective(M, L);
}

}  // namespace fsing::finlen
