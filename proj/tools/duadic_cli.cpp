// duadic: build weight-class cyclic codes, certify their parameters and
// check the containment lemmas behind their distance bounds.
//
// Exit codes: 0 all checks match, 2 a computed value disagrees with the
// reference value, 3 some certificate is partial (budget ran out), 1 usage
// or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "duadic/bounds.hpp"
#include "duadic/catalog.hpp"
#include "duadic/cosets.hpp"
#include "duadic/cyclic.hpp"
#include "duadic/distance.hpp"
#include "duadic/gf2poly.hpp"
#include "duadic/report.hpp"

using namespace duadic;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitPartial = 3;

struct RunConfig {
    int m = 7;
    int r = 6;
    std::string subset;
    std::string prim_poly;
    std::string engine = "bz";
    std::uint64_t budget = BZOptions{}.budget;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    std::string checkpoint;
    bool progress = false;
    bool complements = false;
    bool all_small = false;
    bool scan_only = false;
    std::string in;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_subset(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c) || c == '{' || c == '}'; }),
                   item.end());
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--S: '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw UsageError("--S needs a comma-separated subset of Z_r, e.g. 0,4,5");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FieldContext make_field(const RunConfig& cfg) {
    if (cfg.m < 3 || cfg.m > kMaxWeightSetDegree) throw UsageError("--m must lie in [3, " + std::to_string(kMaxWeightSetDegree) + "]");
    if (cfg.prim_poly.empty()) return FieldContext(cfg.m);
    BinaryPolynomial p;
    try {
        p = BinaryPolynomial::from_hex(cfg.prim_poly);
    } catch (const std::exception&) {
        throw UsageError("--prim-poly: '" + cfg.prim_poly + "' is not a hex coefficient mask");
    }
    if (!is_primitive(p, cfg.m)) throw UsageError("--prim-poly " + p.to_string() + " is not primitive of degree " + std::to_string(cfg.m));
    return FieldContext(cfg.m, p);
}

Engine parse_engine(const std::string& name) { return name == "exhaustive" ? Engine::kExhaustive : Engine::kBrouwerZimmermann; }

BZOptions bz_options(const RunConfig& cfg) {
    BZOptions o;
    o.budget = cfg.budget;
    o.threads = cfg.threads;
    o.checkpoint_path = cfg.checkpoint;
    if (cfg.progress) {
        o.progress = [](const BZProgress& p) {
            std::cerr << "  weight " << p.round << " set " << p.information_set << "  " << p.lower << " <= d <= " << p.upper << "  "
                      << p.evaluations << " words  " << std::fixed << std::setprecision(1) << p.seconds << "s\n";
        };
    }
    return o;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::kMismatch || b == Verdict::kMismatch) return Verdict::kMismatch;
    if (a == Verdict::kPartial || b == Verdict::kPartial) return Verdict::kPartial;
    return Verdict::kMatch;
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "match") return Verdict::kMatch;
    if (s == "mismatch") return Verdict::kMismatch;
    if (s == "partial") return Verdict::kPartial;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::kMatch: return kExitMatch;
        case Verdict::kMismatch: return kExitMismatch;
        default: return kExitPartial;
    }
}

std::string bracket(std::uint32_t n, std::uint32_t k, const Json& cert) {
    std::string d;
    if (cert.is_null()) {
        d = "?";
    } else if (cert.at("status") == "certified") {
        d = std::to_string(cert.at("upper").get<int>());
    } else {
        d = std::to_string(cert.at("lower").get<int>()) + ".." + std::to_string(cert.at("upper").get<int>());
    }
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]";
}

// ---------------------------------------------------------------------------
// Output

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---------------------------------------------------------------------------
// code-info

Json code_info(const RunConfig& cfg) {
    const auto subset = parse_subset(cfg.subset);
    const auto ctx = make_field(cfg);
    CyclicCode code = [&] {
        try {
            return weight_class_code(ctx, cfg.r, subset);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("invalid (r, m, S): ") + e.what());
        }
    }();
    const auto& t = code.defining_set();
    AmplifiedOptions amp;
    amp.seed = cfg.seed;

    Json j = code_record(code);
    j["r"] = cfg.r;
    j["m"] = cfg.m;
    j["S"] = subset;
    j["prim_poly"] = ctx.modulus().to_hex();
    j["generator"] = code.generator().to_string();
    j["bch_bound"] = to_json(bch_bound(t));
    j["amplified_bound"] = to_json(amplified_bch_bound(t, amp));
    j["theorem_bound"] = cfg.r == 6 && theorem_covers(cfg.m, subset) ? Json(theorem_bound(cfg.m, subset)) : Json(nullptr);

    const auto bar = complement_subset(cfg.r, subset);
    const bool duadic = cfg.r % 2 == 0 && subset.size() * 2 == static_cast<std::size_t>(cfg.r) &&
                        is_splitting(t, weight_defining_set(cfg.r, cfg.m, bar), ctx.n() - 1);
    j["duadic"] = duadic;
    j["mu"] = duadic ? Json(ctx.n() - 1) : Json(nullptr);
    j["square_root_bound"] = duadic ? Json(square_root_bound(ctx.n(), true)) : Json(nullptr);

    if (!t.contains(0)) {
        const auto d = dual(code);
        const auto ext = extend(code);
        j["dual"] = {{"k", d.dimension()},
                     {"generator_hex", d.generator().to_hex()},
                     {"equals_even_weight_subcode", even_weight_subcode(code).generator() == d.generator()},
                     {"amplified_bound", to_json(amplified_bch_bound(d.defining_set(), amp))}};
        j["extended"] = {{"n", ext.length()}, {"k", ext.dimension()}, {"self_dual", is_self_dual(ext)}, {"doubly_even", is_doubly_even(ext)}};
    }
    return j;
}

std::string render_code_info(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    auto opt = [](const Json& v) { return v.is_null() ? std::string("-") : v.dump(); };
    std::vector<std::pair<std::string, std::string>> rows = {
        {"code", code_label(j["r"], j["S"].get<std::vector<int>>(), j["m"])},
        {"n", j["n"].dump()},
        {"k", j["k"].dump()},
        {"|T|", j["defining_set_size"].dump()},
        {"prim_poly", j["prim_poly"]},
        {"generator_hex", j["generator_hex"]},
        {"bch_bound", j["bch_bound"]["bound"].dump()},
        {"amplified_bound", j["amplified_bound"]["bound"].dump()},
        {"amplified_unit", opt(j["amplified_bound"]["unit"])},
        {"theorem_bound", opt(j["theorem_bound"])},
        {"square_root_bound", opt(j["square_root_bound"])},
        {"duadic", j["duadic"].dump()},
    };
    if (j.contains("dual")) {
        rows.emplace_back("dual_k", j["dual"]["k"].dump());
        rows.emplace_back("dual_is_even_subcode", j["dual"]["equals_even_weight_subcode"].dump());
        rows.emplace_back("dual_amplified_bound", j["dual"]["amplified_bound"]["bound"].dump());
        rows.emplace_back("extended_self_dual", j["extended"]["self_dual"].dump());
        rows.emplace_back("extended_doubly_even", j["extended"]["doubly_even"].dump());
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "field,value\n";
        for (const auto& [k, v] : rows) os << k << "," << csv_escape(v) << "\n";
    } else {
        for (const auto& [k, v] : rows) os << std::left << std::setw(22) << k << v << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// table1 / table2

Json certify_entry(const CyclicCode& code, const std::string& label, const std::string& role, int expected_k, int expected_d,
                   const RunConfig& cfg) {
    Json e;
    e["label"] = label;
    e["role"] = role;
    e["n"] = code.n();
    e["k"] = code.dimension();
    e["expected_k"] = expected_k;
    e["expected_d"] = expected_d;
    e["defining_set"] = defining_set_json(code.defining_set());
    e["generator_hex"] = code.generator().to_hex();
    const auto engine = parse_engine(cfg.engine);
    if (engine == Engine::kExhaustive && code.dimension() > ExhaustiveOptions{}.max_dimension)
        throw UsageError("--engine exhaustive handles k <= " + std::to_string(ExhaustiveOptions{}.max_dimension) + ", " + label +
                         " has k = " + std::to_string(code.dimension()));
    if (cfg.progress) std::cerr << label << "\n";
    const auto cert = certify_distance(code, engine, bz_options(cfg));
    e["certificate"] = to_json(cert);
    Verdict v = compare_distance(cert, expected_d);
    if (static_cast<int>(code.dimension()) != expected_k) v = Verdict::kMismatch;
    e["verdict"] = to_string(v);
    return e;
}

Json run_table(const RunConfig& cfg, const std::string& name, const std::vector<ReferenceRow>& rows, const FieldContext& ctx) {
    Json report;
    report["command"] = name;
    report["m"] = ctx.m();
    report["prim_poly"] = ctx.modulus().to_hex();
    report["engine"] = cfg.engine;
    report["rows"] = Json::array();
    Verdict overall = Verdict::kMatch;
    for (const auto& row : rows) {
        Json r;
        r["code"] = certify_entry(row.code, row.label, "code", row.expected_k, row.expected_d, cfg);
        r["dual"] = certify_entry(dual(row.code), row.dual_label, "dual", row.expected_dual_k, row.expected_dual_d, cfg);
        overall = combine(overall, verdict_from_string(r["code"]["verdict"]));
        overall = combine(overall, verdict_from_string(r["dual"]["verdict"]));
        report["rows"].push_back(std::move(r));
    }
    report["verdict"] = to_string(overall);
    return report;
}

std::string render_table(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "label,role,n,k,d_lower,d_upper,status,expected_k,expected_d,verdict\n";
        for (const auto& row : report["rows"])
            for (const auto* role : {"code", "dual"}) {
                const auto& e = row[role];
                const auto& c = e["certificate"];
                os << csv_escape(e["label"]) << "," << role << "," << e["n"] << "," << e["k"] << "," << c["lower"] << "," << c["upper"] << ","
                   << c["status"].get<std::string>() << "," << e["expected_k"] << "," << e["expected_d"] << ","
                   << e["verdict"].get<std::string>() << "\n";
            }
        return os.str();
    }
    os << std::left << std::setw(20) << "Code" << std::setw(16) << "Parameters" << std::setw(16) << "Dual" << std::setw(16) << "Expected"
       << "Verdict\n";
    for (const auto& row : report["rows"]) {
        const auto& c = row["code"];
        const auto& d = row["dual"];
        const std::string expected = "d=" + c["expected_d"].dump() + " / " + d["expected_d"].dump();
        const Verdict v = combine(verdict_from_string(c["verdict"]), verdict_from_string(d["verdict"]));
        os << std::setw(20) << c["label"].get<std::string>() << std::setw(16) << bracket(c["n"], c["k"], c["certificate"]) << std::setw(16)
           << bracket(d["n"], d["k"], d["certificate"]) << std::setw(16) << expected << to_string(v) << "\n";
    }
    os << "verdict: " << report["verdict"].get<std::string>() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// verify

Json verify_one(int m, const RunConfig& cfg, bool& failed) {
    Json j;
    j["m"] = m;
    RunConfig local = cfg;
    local.m = m;
    const auto ctx = make_field(local);

    std::vector<std::vector<int>> found;
    for (const auto& p : duadic_scan(6, m)) found.push_back(p.subset);
    const auto expected = expected_duadic_subsets(m);
    j["scan"] = {{"found", found}, {"expected", expected}, {"pass", found == expected}};
    if (found != expected) failed = true;
    if (cfg.scan_only) return j;

    j["lemmas"] = Json::array();
    for (const auto& clause : lemma_suite(m)) {
        j["lemmas"].push_back(to_json(clause));
        if (!clause.pass) failed = true;
    }
    j["gcd_identity"] = true;
    for (std::uint64_t a : {2, 3})
        for (unsigned x = 1; x <= 20; ++x)
            for (unsigned y = 1; y <= 20; ++y)
                if (!gcd_power_identity_holds(a, x, y)) j["gcd_identity"] = false;
    if (!j["gcd_identity"].get<bool>()) failed = true;

    j["codes"] = Json::array();
    for (const auto& s : expected)
        for (const auto& subset : {s, complement_subset(6, s)}) {
            const auto check = check_duadic_code(ctx, subset);
            j["codes"].push_back({{"S", subset},
                                  {"dimension_ok", check.dimension_ok},
                                  {"dual_law_ok", check.dual_law_ok},
                                  {"dual_is_even_subcode", check.dual_is_even_subcode},
                                  {"self_dual_extended", check.self_dual_extended},
                                  {"doubly_even_extended", check.doubly_even_extended},
                                  {"amplified_bound", check.amplified},
                                  {"dual_amplified_bound", check.dual_amplified},
                                  {"theorem_bound", check.theorem ? Json(check.theorem) : Json(nullptr)},
                                  {"pass", check.ok()}});
            if (!check.ok()) failed = true;
        }
    return j;
}

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string render_verify(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "m,check,item,pass\n";
        for (const auto& r : report["results"]) {
            os << r["m"] << ",scan,," << r["scan"]["pass"] << "\n";
            if (!r.contains("lemmas")) continue;
            for (const auto& c : r["lemmas"]) os << r["m"] << ",lemma," << c["lemma"] << "." << c["item"] << " S=" << csv_escape(set_text(c["S"])) << "," << c["pass"] << "\n";
            os << r["m"] << ",gcd_identity,," << r["gcd_identity"] << "\n";
            for (const auto& c : r["codes"]) os << r["m"] << ",code," << csv_escape(set_text(c["S"])) << "," << c["pass"] << "\n";
        }
        return os.str();
    }
    for (const auto& r : report["results"]) {
        os << "m = " << r["m"] << "\n";
        os << "  scan      ";
        for (const auto& s : r["scan"]["found"]) os << set_text(s) << " ";
        os << (r["scan"]["pass"].get<bool>() ? "ok" : "FAIL (expected different subsets)") << "\n";
        if (!r.contains("lemmas")) continue;
        for (const auto& c : r["lemmas"]) {
            os << "  lemma " << c["lemma"] << "." << c["item"] << "  S=" << std::setw(8) << set_text(c["S"]) << " v=" << c["v"] << " A=" << c["A"]
               << "  " << (c["pass"].get<bool>() ? "ok" : "FAIL");
            if (c["degenerate"].get<bool>()) os << " (degenerate: v = 1)";
            if (!c["pass"].get<bool>() && c["alternate_pass"].get<bool>()) os << " (holds with the other v)";
            os << "\n";
        }
        os << "  gcd identity  " << (r["gcd_identity"].get<bool>() ? "ok" : "FAIL") << "\n";
        for (const auto& c : r["codes"]) {
            os << "  code S=" << std::setw(8) << set_text(c["S"]) << " amplified " << c["amplified_bound"] << " dual " << c["dual_amplified_bound"]
               << " theorem " << (c["theorem_bound"].is_null() ? std::string("-") : c["theorem_bound"].dump()) << "  "
               << (c["pass"].get<bool>() ? "ok" : "FAIL") << "\n";
        }
    }
    os << "verdict: " << report["verdict"].get<std::string>() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// check-report

Verdict recheck_entry(const Json& e, const std::optional<FieldContext>& ctx, std::vector<std::string>& problems) {
    const std::string label = e.at("label");
    const auto n = e.at("n").get<std::uint32_t>();
    std::vector<Residue> members = e.at("defining_set").get<std::vector<Residue>>();
    const DefiningSet set(n, std::move(members));
    const CyclicCode code(set, BinaryPolynomial::from_hex(e.at("generator_hex").get<std::string>()));
    if (ctx && from_defining_set(*ctx, set).generator() != code.generator())
        problems.push_back(label + ": generator does not match the defining set over the stated modulus");
    const auto cert = certificate_from_json(e.at("certificate"));
    if (!recheck_certificate(cert, code)) problems.push_back(label + ": certificate fails the witness check");
    Verdict v = compare_distance(cert, e.at("expected_d").get<int>());
    if (static_cast<int>(code.dimension()) != e.at("expected_k").get<int>()) v = Verdict::kMismatch;
    if (to_string(v) != e.at("verdict").get<std::string>()) problems.push_back(label + ": stored verdict differs from the certificate");
    return v;
}

int check_report(const RunConfig& cfg) {
    std::ifstream in(cfg.in);
    if (!in) throw UsageError("cannot read " + cfg.in);
    const Json report = Json::parse(in);
    std::optional<FieldContext> ctx;
    if (report.contains("prim_poly") && report.contains("m"))
        ctx.emplace(report.at("m").get<int>(), BinaryPolynomial::from_hex(report.at("prim_poly").get<std::string>()));
    std::vector<std::string> problems;
    Verdict overall = Verdict::kMatch;
    std::size_t entries = 0;
    for (const auto& row : report.at("rows"))
        for (const auto* role : {"code", "dual"}) {
            overall = combine(overall, recheck_entry(row.at(role), ctx, problems));
            ++entries;
        }
    if (report.at("verdict").get<std::string>() != to_string(overall)) problems.push_back("stored overall verdict differs");
    for (const auto& p : problems) std::cerr << "check-report: " << p << "\n";
    std::cout << entries << " certificates rechecked, verdict " << to_string(overall) << (problems.empty() ? "" : ", report inconsistent") << "\n";
    if (!problems.empty()) return kExitError;
    return exit_code(overall);
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* app, RunConfig& cfg) {
    app->add_option("--m", cfg.m, "Field degree; n = 2^m - 1")->envname("DUADIC_M")->capture_default_str();
    app->add_option("--prim-poly", cfg.prim_poly, "Primitive polynomial as a hex coefficient mask (default: smallest)")->envname("DUADIC_PRIM_POLY");
    app->add_option("--seed", cfg.seed, "Seed for randomized unit sampling")->envname("DUADIC_SEED")->capture_default_str();
    app->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->envname("DUADIC_FORMAT")
        ->capture_default_str();
    app->add_option("--out", cfg.out, "Write the report to FILE instead of stdout")->envname("DUADIC_OUT");
}

void add_engine(CLI::App* app, RunConfig& cfg) {
    app->add_option("--engine", cfg.engine, "Distance engine")
        ->check(CLI::IsMember({"exhaustive", "bz"}))
        ->envname("DUADIC_ENGINE")
        ->capture_default_str();
    app->add_option("--budget", cfg.budget, "Codeword evaluations before giving up with a partial certificate")
        ->envname("DUADIC_BUDGET")
        ->capture_default_str();
    app->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->envname("DUADIC_THREADS")->capture_default_str();
    app->add_option("--checkpoint", cfg.checkpoint, "State file for resumable certification")->envname("DUADIC_CHECKPOINT");
    app->add_flag("--progress", cfg.progress, "Report certification progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight-class duadic codes of length 2^m - 1"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* info = app.add_subcommand("code-info", "Parameters, bounds and properties of C_[r,m,S]");
    add_common(info, cfg);
    info->add_option("--r", cfg.r, "Modulus for the base-2 weight")->envname("DUADIC_R")->capture_default_str();
    info->add_option("--S", cfg.subset, "Subset of Z_r, comma separated")->envname("DUADIC_S")->required();

    auto* t1 = app.add_subcommand("table1", "Certify C_[6,7,S] for S = {0,2,3}, {0,3,5}, {0,4,5} and their duals");
    add_common(t1, cfg);
    add_engine(t1, cfg);
    t1->add_flag("--complements", cfg.complements, "Also certify the codes for the complementary subsets");

    auto* t2 = app.add_subcommand("table2", "Certify the reference codes of length 127 and their duals");
    add_common(t2, cfg);
    add_engine(t2, cfg);

    auto* ver = app.add_subcommand("verify", "Duadic scan, containment lemmas and structural checks for one m");
    add_common(ver, cfg);
    ver->add_flag("--all-small", cfg.all_small, "Run m = 5, 7, 9, 11, 13, 15");
    ver->add_flag("--scan", cfg.scan_only, "Only compare the duadic scan with the reference lists");

    auto* chk = app.add_subcommand("check-report", "Re-verify a table1/table2 JSON report without recomputing distances");
    chk->add_option("--in", cfg.in, "Report file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            emit(cfg, render_code_info(code_info(cfg), cfg.format));
            return kExitMatch;
        }
        if (t1->parsed() || t2->parsed()) {
            if (cfg.m != 7) throw UsageError("the reference tables are for m = 7");
            const auto ctx = make_field(cfg);
            const bool first = t1->parsed();
            const auto rows = first ? table1_rows(ctx, cfg.complements) : table2_rows(ctx);
            const Json report = run_table(cfg, first ? "table1" : "table2", rows, ctx);
            emit(cfg, render_table(report, cfg.format));
            return exit_code(verdict_from_string(report["verdict"]));
        }
        if (ver->parsed()) {
            std::vector<int> ms;
            if (cfg.all_small)
                ms = {5, 7, 9, 11, 13, 15};
            else if (cfg.m % 2 == 1 && cfg.m >= 5)
                ms = {cfg.m};
            else
                throw UsageError("verify needs odd m >= 5 or --all-small");
            Json report;
            report["command"] = "verify";
            report["results"] = Json::array();
            bool failed = false;
            for (int m : ms) report["results"].push_back(verify_one(m, cfg, failed));
            report["verdict"] = failed ? "mismatch" : "match";
            emit(cfg, render_verify(report, cfg.format));
            return failed ? kExitMismatch : kExitMatch;
        }
        if (chk->parsed()) return check_report(cfg);
    } catch (const UsageError& e) {
        std::cerr << "duadic: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "duadic: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
