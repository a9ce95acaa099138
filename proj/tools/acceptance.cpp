#include "fsing/finlen/lab.hpp"
#include "fsing/random_fixtures.hpp"
#include "fsing/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace fsing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(1) << s << " s";
    return o.str();
}

struct Timed {
    FixtureRun run;
    double seconds = 0;
};

Timed timed_reproduce(const std::string& id) {
    auto t0 = Clock::now();
    Timed t{reproduce(id), 0};
    t.seconds = seconds_since(t0);
    return t;
}

std::string failures(const FixtureRun& r) {
    std::string s;
    for (const auto& a : r.assertions)
        if (!a.pass) s += "; failed: " + a.name + (a.detail.empty() ? "" : " [" + a.detail + "]");
    return s;
}

std::string bundle_summary(const Timed& t) {
    return t.run.id + " " + std::to_string(t.run.assertions.size()) + " assertions in " + secs(t.seconds) +
           failures(t.run);
}

std::size_t count_named(const FixtureRun& r, const std::string& needle, bool* all_pass) {
    std::size_t n = 0;
    for (const auto& a : r.assertions)
        if (a.name.find(needle) != std::string::npos) {
            ++n;
            if (!a.pass) *all_pass = false;
        }
    return n;
}

int report(int n, bool pass, const std::string& summary) {
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << summary << std::endl;
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria 1-9"};
    bool skip_slow = false;
    app.add_flag("--skip-slow", skip_slow, "Do not run the Segre p = 7 purity check");
    CLI11_PARSE(app, argc, argv);
    const std::uint64_t seed = session_seed();
    int failed = 0;

    try {
        // 1
        auto semigroup = timed_reproduce("ex-semigroup");
        failed += report(1, semigroup.run.pass() && semigroup.seconds < 30,
                         bundle_summary(semigroup) + "; f_m = 2 because H^1 has finite length");

        // 2
        auto sr = timed_reproduce("ex-stanley-reisner");
        failed += report(2, sr.run.pass() && sr.seconds < 90, bundle_summary(sr) + " for p = 2, 3, 5");

        // 3
        auto fs = timed_reproduce("ex-fedder-singh");
        failed += report(3, fs.run.pass() && fs.seconds < 120, bundle_summary(fs));

        // 4
        auto segre = timed_reproduce("ex-segre-p2");
        bool pass4 = segre.run.pass() && segre.seconds < 300;
        std::string summary4 = bundle_summary(segre);
        std::optional<Timed> segre7;
        if (skip_slow) {
            pass4 = false;
            summary4 += "; p = 7 purity not run (--skip-slow)";
        } else {
            segre7 = timed_reproduce("ex-segre-p7");
            pass4 = pass4 && segre7->run.pass() && segre7->seconds < 600;
            summary4 += "; " + bundle_summary(*segre7);
        }
        failed += report(4, pass4, summary4);

        // 5
        bool oracle_ok = true;
        std::size_t n1 = count_named(semigroup.run, "Koszul oracle", &oracle_ok);
        std::size_t n2 = count_named(sr.run, "Koszul oracle", &oracle_ok);
        std::size_t n4 = count_named(segre.run, "Koszul oracle", &oracle_ok);
        if (segre7) n4 += count_named(segre7->run, "Koszul oracle", &oracle_ok);
        failed += report(5, oracle_ok && n1 >= 1 && n2 >= 3 && n4 >= 1,
                         "agreement on " + std::to_string(n1 + n2 + n4) +
                             " windows covering the socle degrees (semigroup H^1, Stanley-Reisner H^1, Segre H^2)");

        // 6
        auto meta = metamorphic_suite(seed, 20, 400);
        std::string v6 = meta.violations.empty() ? "" : "; first: " + meta.violations.front();
        failed += report(6, meta.with_premises >= 20 && meta.violations.empty(),
                         std::to_string(meta.with_premises) + " instances with verified premises (" +
                             std::to_string(meta.instances) + " drawn, seed " + std::to_string(seed) + "), " +
                             std::to_string(meta.violations.size()) + " violations" + v6);

        // 7
        auto ex = finlen::exhaustive_f2(3);
        auto perfect = finlen::perfect_quotients(200, seed);
        bool counter = true;
        for (std::uint32_t p : {2u, 3u, 5u}) counter = counter && finlen::nonperfect_counterexample(p);
        failed += report(7, ex.checked > 0 && ex.discrepancies == 0 && perfect.discrepancies == 0 && counter,
                         "F_2 dim <= 3: " + std::to_string(ex.checked) + " modules, " +
                             std::to_string(ex.discrepancies) + " discrepancies; F_q: " +
                             std::to_string(perfect.checked) + " instances, " +
                             std::to_string(perfect.discrepancies) + " failures; F_p(t) counterexample " +
                             (counter ? "reproduced" : "NOT reproduced"));

        // 8
        std::size_t pairs = 0, bad = 0, reports = 0;
        std::vector<std::string> incoherent;
        for (const auto& f : bundled_files()) {
            RingInput in = parse_input(f.text);
            auto data = std::make_shared<const ExtFrobenius>(in.ideal);
            for (int j = 0; j <= data->n(); ++j) {
                if (data->ext(j).generators().empty()) continue;
                bad += semilinearity_violations(CartierOperator(data, j), seed + static_cast<std::uint64_t>(j), 100);
                pairs += 100;
            }
            // the p = 7 report is checked inside its bundle
            if (f.name == "segre-p7.fring") continue;
            ++reports;
            for (const auto& v : coherence_violations(classify(data))) incoherent.push_back(f.name + ": " + v);
        }
        bool coherent_bundles = true;
        std::size_t bundle_reports = 0;
        for (const Timed* t : {&semigroup, &sr, &fs, &segre})
            bundle_reports += count_named(t->run, "report coherence", &coherent_bundles);
        if (segre7) bundle_reports += count_named(segre7->run, "report coherence", &coherent_bundles);
        reports += bundle_reports + meta.coherence_checks;
        failed += report(8, bad == 0 && incoherent.empty() && coherent_bundles,
                         std::to_string(bad) + " semilinearity failures in " + std::to_string(pairs) +
                             " pairs; coherence violated in " +
                             std::to_string(incoherent.size() + (coherent_bundles ? 0 : 1)) + " of " +
                             std::to_string(reports) + " reports" +
                             (incoherent.empty() ? "" : " (" + incoherent.front() + ")"));

        // 9
        std::size_t compared = 0, differing = 0;
        auto twice = [&](const std::function<std::string()>& f) {
            ++compared;
            if (f() != f()) ++differing;
        };
        for (const auto& f : bundled_files()) {
            if (f.name == "segre-p7.fring") continue;
            RingInput in = parse_input(f.text);
            twice([&] { return dump(classification_json(in, classify(in.ideal))); });
            for (const auto& [name, text] : in.element_text)
                twice([&] {
                    auto c = deform_certify(in.ideal, in.element(name), {Subject::Ring, Property::FAntiNilpotent});
                    return dump(deformation_json(in, c));
                });
        }
        {
            RingInput in = parse_input(bundled_file("semigroup.fring").text);
            twice([&] {
                auto data = std::make_shared<const ExtFrobenius>(in.ideal);
                auto [lo, hi] = support_window(*data, 1);
                return dump(oracle_json(in, oracle_check(data, 1, lo, hi)));
            });
        }
        for (const auto& id : {"ex-semigroup", "ex-fedder-singh", "ex-nonperfect"})
            twice([&] { return dump(fixture_json(reproduce(id))); });
        failed += report(9, differing == 0,
                         std::to_string(compared) + " commands run twice, " + std::to_string(differing) +
                             " with differing JSON");
    } catch (const Error& e) {
        std::cout << "aborted: " << e.what() << std::endl;
        return 1;
    }
    return failed == 0 ? 0 : 1;
}
