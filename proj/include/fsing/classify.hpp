#pragma once

#include "fsing/cartier.hpp"
#include "fsing/certificate.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fsing {

struct FedderResult {
    bool pure = false;
    std::optional<Polynomial> witness;  // element of (I^[p] : I) outside m^[p]
};

/// (I^[p] : I), or its generators up to max_degree.
Ideal frobenius_colon(const Ideal& I, std::optional<std::int64_t> max_degree = std::nullopt);
/// (I^[p] : I) is not contained in m^[p].
FedderResult fedder_test(const Ideal& I);

/// (I : x) = I, for x homogeneous of positive degree. Throws PreconditionViolated otherwise.
bool regular_element(const Ideal& I, const Polynomial& x);

struct ElementVerdict {
    Tri status = Tri::Unknown;
    int index = -1;        // cohomological index i of the witness
    std::string witness;   // kernel generator on Ext^(n-i)
};

/// Multiplication by x is surjective on every H^i_m(R): x is injective on every Ext^j(R, A).
/// Throws NotRegular.
ElementVerdict surjective_element(const ExtFrobenius& data, const Polynomial& x);
/// Every coker(x on H^i_m(R)) has finite length: every (0 :_{Ext^j} x) has finite length.
ElementVerdict strictly_filter_regular(const ExtFrobenius& data, const Polynomial& x);
/// x^(p-1) F is injective on H^i_m(R): the twisted Cartier operator is onto Ext^(n-i).
bool twisted_injectivity(const std::shared_ptr<const ExtFrobenius>& data, const Polynomial& x, int i);
/// Theta(N) = N.
bool theta_surjective(const CartierOperator& T);

/// H^i_m(R/(x^h)) -> H^i_m(R/(x^k)), induced by multiplication by x^(k-h), is injective for every i.
bool power_map_injective(const Ideal& I, const Polynomial& x, int h, int k);

struct IndexReport {
    int i = 0;
    int j = 0;             // Ext index n - i
    bool vanishes = true;  // H^i_m(R) = 0
    std::optional<std::int64_t> length;  // set when H^i_m(R) has finite length
    Verdict F_injective, F_full, F_nilpotent;
    std::optional<int> hsl_index;
};

struct ClassificationReport {
    int n = 0, dim = 0, depth = 0, f_m = 0;
    bool is_CM = false, is_gCM = false;
    std::vector<IndexReport> indices;  // i = 0..dim
    Verdict F_pure, F_injective, F_full, strongly_F_injective, F_anti_nilpotent;
    std::optional<DeformationCertificate> anti_nilpotent_certificate;
};

struct NamedElement {
    std::string name;
    Polynomial value;
};

struct ClassifyOptions {
    int hsl_cap = 30;
    bool fedder = true;
    bool full = true;
    /// Candidates for the deformation route to F-anti-nilpotency.
    std::vector<NamedElement> elements;
};

/// Throws UnitIdeal.
ClassificationReport classify(const Ideal& I, const ClassifyOptions& opt = {});
ClassificationReport classify(const std::shared_ptr<const ExtFrobenius>& data, const ClassifyOptions& opt = {});

/// Implications that every report must satisfy; returns a description of each violation.
std::vector<std::string> coherence_violations(const ClassificationReport& r);

}  // namespace fsing
