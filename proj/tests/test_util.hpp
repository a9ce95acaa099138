#pragma once

#include "fsing/input_format.hpp"

#include <random>
#include <string>
#include <vector>

namespace fsing::test {

inline RingPtr ring(std::uint32_t p, const std::string& spec) {
    // spec like "x:1 y:1"
    std::vector<std::string> names;
    std::vector<std::int64_t> w;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        while (pos < spec.size() && spec[pos] == ' ') ++pos;
        if (pos >= spec.size()) break;
        std::size_t end = spec.find(' ', pos);
        std::string tok = spec.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        auto c = tok.find(':');
        names.push_back(tok.substr(0, c));
        w.push_back(c == std::string::npos ? 1 : std::stoll(tok.substr(c + 1)));
        pos = end == std::string::npos ? spec.size() : end;
    }
    return make_ring(p, names, w);
}

inline Polynomial poly(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

inline Ideal ideal(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(poly(R, s));
    return Ideal(R, g);
}

/// Random homogeneous polynomial of weighted degree d with up to `terms` terms.
inline Polynomial random_homogeneous(const RingPtr& R, std::int64_t d, int terms, std::mt19937& rng) {
    auto mons = monomials_of_degree(*R, d);
    std::vector<Term> t;
    if (mons.empty()) return Polynomial(R);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    std::uniform_int_distribution<std::uint32_t> coef(1, R->p() - 1);
    for (int k = 0; k < terms; ++k) t.push_back({mons[pick(rng)], 0, coef(rng)});
    return Polynomial::from_terms(R, std::move(t));
}

}  // namespace fsing::test
