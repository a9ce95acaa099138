#include "fsing/random_fixtures.hpp"

#include "fsing/deformation.hpp"

#include <random>

namespace fsing {

namespace {

Monomial random_monomial(int n, int degree, std::mt19937_64& rng) {
    Monomial m;
    for (int k = 0; k < degree; ++k) ++m.e[rng() % static_cast<unsigned>(n)];
    return m;
}

}  // namespace

std::optional<RandomInstance> random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    static constexpr std::uint32_t primes[] = {2, 3, 5};
    const std::uint32_t p = primes[rng() % 3];
    const int n = 3 + static_cast<int>(rng() % 2);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    RingPtr R = make_ring(p, names, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));

    RandomInstance out;
    out.seed = seed;
    out.kind = rng() % 2 ? "binomial" : "monomial";
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
        const int d = 2 + static_cast<int>(rng() % 2);
        Polynomial g = Polynomial::monomial(R, random_monomial(n, d, rng));
        if (out.kind == "binomial") g = g - Polynomial::monomial(R, random_monomial(n, d, rng));
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) return std::nullopt;
    out.ideal = Ideal(R, gens);
    if (out.ideal.is_unit()) return std::nullopt;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Term> t;
        for (int i = 0; i < n; ++i) {
            const auto c = static_cast<Coeff>(rng() % p);
            if (!c) continue;
            Monomial m;
            m.e[i] = 1;
            t.push_back({m, 1, c});
        }
        Polynomial x = Polynomial::from_terms(R, std::move(t));
        if (x.is_zero()) continue;
        if (regular_element(out.ideal, x)) {
            out.element = x;
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace fsing

namespace fsing {

MetamorphicTally metamorphic_suite(std::uint64_t base, std::size_t target, std::size_t max_seeds) {
    MetamorphicTally t;
    for (std::uint64_t seed = base; t.with_premises < target && seed < base + max_seeds; ++seed) {
        auto inst = random_instance(seed);
        if (!inst) continue;
        ++t.instances;
        const std::string tag = "seed " + std::to_string(seed) + ": ";
        auto r = consistency_crosscheck(inst->ideal, inst->element);
        for (const auto& v : r.violations) t.violations.push_back(tag + v);
        for (const auto& f : r.fired)
            if (f[0] == 'R') {
                ++t.with_premises;
                break;
            }
        ++t.coherence_checks;
        for (const auto& v : coherence_violations(classify(inst->ideal))) t.violations.push_back(tag + v);
    }
    return t;
}

}  // namespace fsing
