#include "fsing/errors.hpp"
#include "fsing/fixtures.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fsing;

namespace {

/// Kernel of the map sending the targets to the images, modulo `relations` on the source side.
Ideal eliminated(std::uint32_t p, const std::vector<std::string>& params, std::int64_t param_weight,
                 const std::vector<std::string>& targets, std::int64_t target_weight,
                 const std::vector<std::string>& images, const std::vector<std::string>& relations) {
    std::vector<std::string> names = params;
    names.insert(names.end(), targets.begin(), targets.end());
    std::vector<std::int64_t> w(params.size(), param_weight);
    w.insert(w.end(), targets.size(), target_weight);
    auto R = make_ring(p, names, w);
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < targets.size(); ++k)
        gens.push_back(parse_polynomial(R, targets[k] + " - (" + images[k] + ")"));
    for (const auto& r : relations) gens.push_back(parse_polynomial(R, r));
    Ideal E = eliminate(Ideal(R, gens), static_cast<int>(params.size()));
    auto S = make_ring(p, targets, std::vector<std::int64_t>(targets.size(), 1));
    std::vector<Polynomial> out;
    for (const auto& g : E.generators()) out.push_back(parse_polynomial(S, g.to_string()));
    return Ideal(S, out);
}

bool agrees(const std::string& file, const Ideal& J) {
    RingInput in = parse_input(bundled_file(file).text);
    bool ok = in.ideal.same_as(J);
    std::cout << (ok ? "ok    " : "DIFF  ") << file << "\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derive the eliminated fixtures and write or check fixtures/*.fring"};
    std::string dir;
    bool check = false;
    app.add_option("dir", dir, "Fixture directory")->required();
    app.add_flag("--check", check, "Compare the directory with the bundled files instead of writing");
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    try {
        const std::vector<std::string> abcd{"a", "b", "c", "d"}, segre{"a", "b", "c", "d", "e", "f"};
        ok &= agrees("semigroup.fring", eliminated(5, {"s", "t"}, 1, abcd, 4, {"s^4", "s^3*t", "s*t^3", "t^4"}, {}));
        const std::vector<std::string> images{"x*s", "x*t", "y*s", "y*t", "z*s", "z*t"};
        for (std::uint32_t p : {2u, 7u})
            ok &= agrees("segre-p" + std::to_string(p) + ".fring",
                         eliminated(p, {"x", "y", "z", "s", "t"}, 1, segre, 2, images, {"x^3 + y^3 + z^3"}));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const auto& f : bundled_files()) {
        auto path = std::filesystem::path(dir) / f.name;
        RingInput in = parse_input(f.text);
        bool round_trip = parse_input(print_input(in)).ideal.same_as(in.ideal);
        if (!round_trip) std::cout << "DIFF  " << f.name << " does not round-trip\n";
        ok &= round_trip;
        if (check) {
            std::ifstream is(path);
            std::stringstream s;
            s << is.rdbuf();
            bool same = is && s.str() == f.text;
            std::cout << (same ? "ok    " : "DIFF  ") << path.string() << "\n";
            ok &= same;
        } else {
            std::filesystem::create_directories(dir);
            std::ofstream(path) << f.text;
        }
    }
    return ok ? 0 : 1;
}
