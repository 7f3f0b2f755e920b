#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "spair/constructions.hpp"
#include "spair/report.hpp"
#include "spair/reproduction.hpp"

namespace {

using namespace spair;

enum Exit { kOk = 0, kVerification = 1, kInput = 2, kBudget = 3 };

struct Common {
    std::string strategy = "auto";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::string out;
    bool json = false;
};

void add_common(CLI::App* app, Common& c, bool with_strategy = true) {
    if (with_strategy)
        app->add_option("--strategy", c.strategy, "distance strategy")
            ->check(CLI::IsMember({"auto", "exhaustive", "bounded", "castagnoli"}))
            ->capture_default_str();
    app->add_option("--budget", c.budget, "maximum number of encodings")->capture_default_str();
    app->add_option("--seed", c.seed, "seed for randomized algorithms")->capture_default_str();
    app->add_option("--threads", c.threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
    app->add_option("--out", c.out, "write the JSON result to this file");
    app->add_flag("--json", c.json, "print JSON instead of a summary");
}

unsigned resolve_threads(unsigned t) { return t ? t : std::max(1u, std::thread::hardware_concurrency()); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::BadParameter, "cannot write " + path);
    f << text;
}

AnalyzeOptions analyze_options(const Common& c) {
    return {DistanceStrategy::parse(c.strategy), {c.budget, resolve_threads(c.threads)}, c.seed};
}

int emit_report(const AnalysisReport& r, const Common& c) {
    const std::string text = to_json(r).dump(2) + "\n";
    if (!c.out.empty()) write_file(c.out, text);
    std::cout << (c.json ? text : summary(r));
    return r.budget_exceeded ? kBudget : kOk;
}

int cmd_analyze(const std::string& spec_path, const Common& c) {
    std::ifstream in(spec_path);
    if (!in) throw Error(Errc::MalformedSpec, "cannot read " + spec_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::MalformedSpec, e.what());
    }
    const auto code = build_code(parse_code_spec(j));
    return emit_report(analyze(code, analyze_options(c)), c);
}

int cmd_construct(const std::string& family, std::uint64_t p_or_q, std::uint64_t n, const std::string& spec_out,
                  const Common& c) {
    ConstructOptions opt;
    opt.enumeration = {c.budget, resolve_threads(c.threads)};
    const Family fam = parse_family(family);
    if (fam == Family::MdsN6 && n == 0) throw Error(Errc::BadParameter, "mds_n_6 needs --n");
    if (p_or_q == 0) throw Error(Errc::BadParameter, fam == Family::MdsN6 ? "mds_n_6 needs --q" : "family needs --p");
    const auto built = construct(fam, p_or_q, n, opt);
    if (!spec_out.empty()) write_file(spec_out, code_spec_json(built.code).dump(2) + "\n");
    return emit_report(analyze(built.code, analyze_options(c)), c);
}

int cmd_verify(const std::string& tier, bool tamper, const Common& c) {
    repro::Suite suite({repro::parse_tier(tier), resolve_threads(c.threads), tamper, c.seed});
    bool ok = true;
    ordered_json items = ordered_json::array();
    suite.run_all([&](const repro::CriterionResult& r) {
        ok = ok && r.pass();
        repro::print_result(std::cout, r, true);
        std::cout.flush();
        ordered_json checks = ordered_json::array();
        for (const auto& ch : r.checks)
            checks.push_back({{"item", ch.item},
                              {"expected", ch.expected},
                              {"computed", ch.computed},
                              {"status", ch.skipped ? "skipped" : ch.pass ? "pass" : "fail"}});
        items.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
    });
    std::cout << (ok ? "all criteria passed" : "verification FAILED") << " (tier " << tier << ")\n";
    if (!c.out.empty()) write_file(c.out, ordered_json{{"tier", tier}, {"pass", ok}, {"criteria", items}}.dump(2) + "\n");
    return ok ? kOk : kVerification;
}

std::string optional_value(const std::optional<DistanceResult>& d) {
    if (!d) return "?";
    return (d->lower_bound_only ? ">=" : "") + std::to_string(d->value);
}

int cmd_search(std::uint64_t q, std::size_t n, std::size_t max_codes, const Common& c) {
    auto res = search_optimal_cyclic(q, n, max_codes, c.budget, resolve_threads(c.threads), c.seed);
    auto key = [](const SearchRow& r) { return r.d_pair ? static_cast<long long>(r.d_pair->value) : -1LL; };
    std::stable_sort(res.rows.begin(), res.rows.end(), [&](const SearchRow& a, const SearchRow& b) {
        if (key(a) != key(b)) return key(a) > key(b);
        return a.k > b.k;
    });
    ordered_json rows = ordered_json::array();
    for (const auto& r : res.rows) {
        rows.push_back({{"generator", r.generator.coeffs()},
                        {"k", r.k},
                        {"d_hamming", r.d_hamming ? ordered_json(r.d_hamming->value) : ordered_json(nullptr)},
                        {"d_pair", r.d_pair ? ordered_json(r.d_pair->value) : ordered_json(nullptr)},
                        {"mds_pair", r.mds_pair},
                        {"budget_exhausted", r.budget_exhausted}});
    }
    ordered_json factors = ordered_json::array();
    for (const auto& [poly, mult] : res.factors) factors.push_back({{"factor", poly.coeffs()}, {"multiplicity", mult}});
    const ordered_json j = {{"q", q}, {"n", n}, {"seed", c.seed}, {"factors", factors},
                            {"rows", rows},  {"budget_exhausted", res.budget_exhausted},
                            {"perf", {{"enumerations", res.enumerations}}}};
    const std::string text = j.dump(2) + "\n";
    if (!c.out.empty()) write_file(c.out, text);
    if (c.json) {
        std::cout << text;
    } else {
        std::cout << "cyclic codes of length " << n << " over GF(" << q << "): " << res.rows.size() << "\n";
        std::cout << std::left << std::setw(4) << "k" << std::setw(6) << "d_H" << std::setw(6) << "d_p"
                  << std::setw(10) << "MDS-pair" << "generator\n";
        for (const auto& r : res.rows)
            std::cout << std::setw(4) << r.k << std::setw(6) << optional_value(r.d_hamming) << std::setw(6)
                      << optional_value(r.d_pair) << std::setw(10)
                      << (r.budget_exhausted ? "budget" : r.mds_pair ? "yes" : "no") << r.generator.to_string()
                      << "\n";
    }
    return res.budget_exhausted ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spair: symbol-pair distance toolkit for constacyclic codes"};
    app.set_version_flag("--version", std::string(SPAIR_VERSION));
    app.require_subcommand(1);

    Common common;

    auto* analyze_cmd = app.add_subcommand("analyze", "compute distances and bounds for a code spec file");
    std::string spec_path;
    analyze_cmd->add_option("spec", spec_path, "code spec (JSON)")->required();
    add_common(analyze_cmd, common);

    auto* construct_cmd = app.add_subcommand("construct", "build a code from one of the MDS symbol-pair families");
    std::string family, spec_out;
    std::uint64_t p = 0, q = 0, n = 0;
    construct_cmd->add_option("family", family, "mds_3p_7 | mds_3p_8 | mds_3p_6 | mds_n_6")->required();
    construct_cmd->add_option("--p", p, "prime (3p families)");
    construct_cmd->add_option("--q", q, "field size (mds_n_6)");
    construct_cmd->add_option("--n", n, "length (mds_n_6)");
    construct_cmd->add_option("--spec-out", spec_out, "write the code spec file here");
    add_common(construct_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the reproduction suite");
    std::string tier = "fast";
    bool tamper = false;
    verify_cmd->add_option("--tier", tier, "fast | full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    verify_cmd->add_flag("--tamper-self-test", tamper)->group("");
    add_common(verify_cmd, common, false);

    auto* search_cmd = app.add_subcommand("search", "rank every cyclic code of a given length");
    std::uint64_t sq = 0;
    std::size_t sn = 0, max_codes = 0;
    search_cmd->add_option("--q", sq, "field size")->required();
    search_cmd->add_option("--n", sn, "length")->required();
    search_cmd->add_option("--max-codes", max_codes, "stop after this many codes (0 = all)");
    add_common(search_cmd, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(spec_path, common);
        if (*construct_cmd) return cmd_construct(family, family == "mds_n_6" ? q : (p ? p : q), n, spec_out, common);
        if (*verify_cmd) return cmd_verify(tier, tamper, common);
        if (*search_cmd) return cmd_search(sq, sn, max_codes, common);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::BudgetExceeded: return kBudget;
            case Errc::VerificationFailed: return kVerification;
            default: return kInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerification;
    }
    return kOk;
}
