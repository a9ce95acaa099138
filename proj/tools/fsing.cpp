#include "fsing/errors.hpp"
#include "fsing/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fsing;

namespace {

enum Exit { Ok = 0, Failed = 1, BadInput = 2, Aborted = 3 };

RingInput load(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        // bundled inputs are addressable by file name
        try {
            return parse_input(bundled_file(std::filesystem::path(path).filename().string()).text);
        } catch (const UnknownFixture&) {
            throw InputError("cannot read " + path);
        }
    }
    std::stringstream s;
    s << f.rdbuf();
    return parse_input(s.str());
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& w) {
    auto dots = w.find("..");
    if (dots == std::string::npos) throw InputError("window must look like lo..hi");
    try {
        std::size_t a = 0, b = 0;
        auto lo = std::stoll(w.substr(0, dots), &a);
        auto hi = std::stoll(w.substr(dots + 2), &b);
        if (a != dots || b != w.size() - dots - 2 || lo > hi) throw InputError("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw InputError("bad window '" + w + "'");
    }
}

Fact target_fact(const std::string& name) {
    Property p = parse_property(name);
    if (p == Property::Surjective || p == Property::StrictlyFilterRegular) return {Subject::Element, p};
    return {Subject::Ring, p};
}

void emit(bool json, const Json& j, const std::string& text) { std::cout << (json ? dump(j) : text); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-singularities of graded rings over F_p"};
    app.require_subcommand(1);
    std::size_t pair_cap = 0;
    bool json = false;
    app.add_option("--pair-cap", pair_cap, "Abort Gröbner computations after N S-pairs");
    app.add_flag("--json", json, "JSON output");

    std::string file;
    std::optional<int> index;
    auto* classify_cmd = app.add_subcommand("classify", "Classify R = A/I");
    classify_cmd->add_option("file", file, "Input file")->required();
    classify_cmd->add_option("--index", index, "Report only H^i");
    classify_cmd->add_flag("--json", json, "JSON output");
    classify_cmd->add_option("--pair-cap", pair_cap, "Abort Gröbner computations after N S-pairs");

    std::string element, target;
    auto* deform_cmd = app.add_subcommand("deform", "Certify a property of R from R/(x)");
    deform_cmd->add_option("file", file, "Input file")->required();
    deform_cmd->add_option("--element", element, "Declared element x")->required();
    deform_cmd->add_option("--target", target, "Property to certify")->required();
    deform_cmd->add_flag("--json", json, "JSON output");
    deform_cmd->add_option("--pair-cap", pair_cap, "Abort Gröbner computations after N S-pairs");

    std::string fixture;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a bundled fixture");
    reproduce_cmd->add_option("fixture", fixture, "Fixture id")->required();
    reproduce_cmd->add_flag("--json", json, "JSON output");

    int oracle_index = 0, stage = KoszulOptions{}.max_stage;
    std::string window;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare local duality with Koszul cohomology");
    oracle_cmd->add_option("file", file, "Input file")->required();
    oracle_cmd->add_option("--index", oracle_index, "Cohomological index i")->required();
    oracle_cmd->add_option("--window", window, "Degree window lo..hi (default: support of H^i)");
    oracle_cmd->add_option("--stage", stage, "Largest Koszul stage")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--json", json, "JSON output");
    oracle_cmd->add_option("--pair-cap", pair_cap, "Abort Gröbner computations after N S-pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }
    if (pair_cap) set_default_pair_cap(pair_cap);

    try {
        if (classify_cmd->parsed()) {
            RingInput in = load(file);
            ClassifyOptions opt;
            for (const auto& [name, text] : in.element_text) opt.elements.push_back({name, in.element(name)});
            auto r = classify(in.ideal, opt);
            if (index && (*index < 0 || *index > r.dim))
                throw InputError("index " + std::to_string(*index) + " outside [0, " + std::to_string(r.dim) + "]");
            emit(json, classification_json(in, r, index), classification_text(r, index));
            return Ok;
        }
        if (deform_cmd->parsed()) {
            RingInput in = load(file);
            auto c = deform_certify(in.ideal, in.element(element), target_fact(target));
            emit(json, deformation_json(in, c), deformation_text(c));
            return Ok;
        }
        if (reproduce_cmd->parsed()) {
            auto run = reproduce(fixture);
            emit(json, fixture_json(run), fixture_text(run));
            return run.pass() ? Ok : Failed;
        }
        if (oracle_cmd->parsed()) {
            RingInput in = load(file);
            auto data = std::make_shared<const ExtFrobenius>(in.ideal);
            if (oracle_index < 0 || oracle_index > in.ring->n())
                throw InputError("index " + std::to_string(oracle_index) + " outside [0, n]");
            auto [lo, hi] = support_window(*data, oracle_index);
            if (!window.empty()) std::tie(lo, hi) = parse_window(window);
            KoszulOptions opt;
            opt.max_stage = stage;
            auto c = oracle_check(data, oracle_index, lo, hi, opt);
            emit(json, oracle_json(in, c), oracle_text(c));
            return c.agree() ? Ok : Failed;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const CapError& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return Aborted;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const UnitIdeal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const WindowTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Failed;
    }
    return Ok;
}
