#include "fsing/report.hpp"

#include <cstdlib>
#include <sstream>

namespace fsing {

namespace {

Json fact_json(const Fact& f) {
    static const char* subjects[] = {"R", "R/(x)", "x"};
    return Json{{"subject", subjects[static_cast<int>(f.subject)]}, {"property", property_name(f.property)}};
}

Json premise_json(const Premise& p) {
    Json j = fact_json(p.fact);
    j["status"] = to_string(p.verdict);
    j["source"] = p.source;
    j["witness"] = p.witness;
    return j;
}

Json index_json(const IndexReport& x) {
    Json j{{"i", x.i}, {"ext_index", x.j}, {"vanishes", x.vanishes}};
    j["length"] = x.length ? Json(*x.length) : Json(nullptr);
    j["F_injective"] = verdict_json(x.F_injective);
    j["F_full"] = verdict_json(x.F_full);
    j["F_nilpotent"] = verdict_json(x.F_nilpotent);
    j["hsl_index"] = x.hsl_index ? Json(*x.hsl_index) : Json(nullptr);
    return j;
}

Json header(const std::string& command) {
    return Json{{"schema", kSchemaVersion}, {"command", command}};
}

std::string verdict_line(const std::string& name, const Verdict& v) {
    std::string s = name + ": " + to_string(v.status);
    if (!v.witness.empty()) s += " (" + v.witness + ")";
    return s + "\n";
}

}  // namespace

std::uint64_t session_seed() {
    const char* s = std::getenv("FSING_SEED");
    if (!s || !*s) return 1;
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    return *end ? 1 : v;
}

Json input_json(const RingInput& in) {
    Json vars = Json::array();
    for (std::size_t k = 0; k < in.var_names.size(); ++k)
        vars.push_back({{"name", in.var_names[k]}, {"weight", in.weights[k]}});
    Json elements = Json::array();
    for (const auto& [name, text] : in.element_text) elements.push_back({{"name", name}, {"value", text}});
    return Json{{"char", in.characteristic}, {"vars", vars},  {"order", in.order},
                {"ideal", in.ideal_text},    {"elements", elements}};
}

Json verdict_json(const Verdict& v) { return Json{{"status", to_string(v.status)}, {"witness", v.witness}}; }

Json certificate_json(const DeformationCertificate& c) {
    Json j{{"target", fact_json(c.target)}, {"element", c.element}, {"proved", c.proved}};
    Json chain = Json::array();
    for (const auto& s : c.chain) {
        Json step{{"rule", s.rule}, {"statement", s.statement}};
        Json pre = Json::array();
        for (const auto& p : s.premises) pre.push_back(premise_json(p));
        step["premises"] = pre;
        Json con = Json::array();
        for (const auto& f : s.conclusions) con.push_back(fact_json(f));
        step["conclusions"] = con;
        chain.push_back(step);
    }
    j["chain"] = chain;
    Json ev = Json::array();
    for (const auto& p : c.evaluated) ev.push_back(premise_json(p));
    j["evaluated"] = ev;
    return j;
}

Json classification_json(const RingInput& in, const ClassificationReport& r, std::optional<int> index) {
    Json j = header("classify");
    j["input"] = input_json(in);
    j["seed"] = session_seed();
    Json idx = Json::array();
    for (const auto& x : r.indices)
        if (!index || x.i == *index) idx.push_back(index_json(x));
    j["indices"] = idx;
    j["summary"] = Json{{"n", r.n},
                        {"dim", r.dim},
                        {"depth", r.depth},
                        {"f_m", r.f_m},
                        {"is_CM", r.is_CM},
                        {"is_gCM", r.is_gCM},
                        {"F_pure", verdict_json(r.F_pure)},
                        {"F_injective", verdict_json(r.F_injective)},
                        {"F_full", verdict_json(r.F_full)},
                        {"strongly_F_injective", verdict_json(r.strongly_F_injective)},
                        {"F_anti_nilpotent", verdict_json(r.F_anti_nilpotent)}};
    j["certificate"] = r.anti_nilpotent_certificate ? certificate_json(*r.anti_nilpotent_certificate) : Json(nullptr);
    return j;
}

Json deformation_json(const RingInput& in, const DeformationCertificate& c) {
    Json j = header("deform");
    j["input"] = input_json(in);
    j["seed"] = session_seed();
    j["certificate"] = certificate_json(c);
    return j;
}

Json fixture_json(const FixtureRun& run) {
    Json j = header("reproduce");
    j["fixture"] = run.id;
    j["seed"] = session_seed();
    Json a = Json::array();
    for (const auto& x : run.assertions) a.push_back({{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    j["assertions"] = a;
    j["pass"] = run.pass();
    return j;
}

Json oracle_json(const RingInput& in, const OracleComparison& c) {
    Json j = header("oracle-check");
    j["input"] = input_json(in);
    j["seed"] = session_seed();
    j["index"] = c.i;
    j["window"] = {c.lo, c.hi};
    j["stage"] = c.stage;
    j["socle_degrees"] = c.socle_degrees;
    Json rows = Json::array();
    for (const auto& r : c.rows)
        rows.push_back({{"d", r.d},
                        {"dim_duality", r.dim_duality},
                        {"dim_koszul", r.dim_koszul},
                        {"frobenius_ranks_duality", r.ranks_duality},
                        {"frobenius_ranks_koszul", r.ranks_koszul},
                        {"agree", r.agree()}});
    j["rows"] = rows;
    j["agree"] = c.agree();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string classification_text(const ClassificationReport& r, std::optional<int> index) {
    std::ostringstream o;
    o << "n = " << r.n << ", dim = " << r.dim << ", depth = " << r.depth << ", f_m = " << r.f_m
      << ", CM: " << (r.is_CM ? "yes" : "no") << ", gCM: " << (r.is_gCM ? "yes" : "no") << "\n";
    for (const auto& x : r.indices) {
        if (index && x.i != *index) continue;
        o << "H^" << x.i << ": ";
        if (x.vanishes) o << "zero";
        else if (x.length) o << "length " << *x.length;
        else o << "not of finite length";
        o << "\n  " << verdict_line("F-injective", x.F_injective) << "  " << verdict_line("F-full", x.F_full) << "  "
          << verdict_line("F-nilpotent", x.F_nilpotent);
        if (x.hsl_index) o << "  HSL index: " << *x.hsl_index << "\n";
    }
    o << verdict_line("F-pure", r.F_pure) << verdict_line("F-injective", r.F_injective)
      << verdict_line("F-full", r.F_full) << verdict_line("strongly F-injective", r.strongly_F_injective)
      << verdict_line("F-anti-nilpotent", r.F_anti_nilpotent);
    if (r.anti_nilpotent_certificate) o << deformation_text(*r.anti_nilpotent_certificate);
    return o.str();
}

std::string deformation_text(const DeformationCertificate& c) {
    std::ostringstream o;
    o << "target " << to_string(c.target) << " via x = " << c.element << ": "
      << (c.proved ? "proved" : "unprovable") << "\n";
    for (const auto& s : c.chain) {
        o << "  " << s.rule << ": " << s.statement << "\n";
        for (const auto& p : s.premises)
            o << "    " << to_string(p.fact) << " = " << to_string(p.verdict) << " [" << p.source << "]"
              << (p.witness.empty() ? "" : " " + p.witness) << "\n";
    }
    if (!c.proved) {
        o << "  computed premises:\n";
        for (const auto& p : c.evaluated)
            o << "    " << to_string(p.fact) << " = " << to_string(p.verdict)
              << (p.witness.empty() ? "" : " (" + p.witness + ")") << "\n";
    }
    return o.str();
}

std::string fixture_text(const FixtureRun& run) {
    std::ostringstream o;
    for (const auto& a : run.assertions)
        o << (a.pass ? "pass  " : "FAIL  ") << a.name << (a.detail.empty() ? "" : "  [" + a.detail + "]") << "\n";
    o << run.id << ": " << (run.pass() ? "pass" : "FAIL") << "\n";
    return o.str();
}

std::string oracle_text(const OracleComparison& c) {
    std::ostringstream o;
    o << "H^" << c.i << " on [" << c.lo << ", " << c.hi << "], Koszul stage " << c.stage << "\n";
    for (const auto& r : c.rows) {
        o << "  d = " << r.d << ": dim " << r.dim_duality << " / " << r.dim_koszul << ", Frobenius ranks [";
        for (std::size_t k = 0; k < r.ranks_duality.size(); ++k) o << (k ? " " : "") << r.ranks_duality[k];
        o << "] / [";
        for (std::size_t k = 0; k < r.ranks_koszul.size(); ++k) o << (k ? " " : "") << r.ranks_koszul[k];
        o << "]" << (r.agree() ? "" : "  MISMATCH") << "\n";
    }
    o << (c.agree() ? "agree" : "disagree") << "\n";
    return o.str();
}

}  // namespace fsing
