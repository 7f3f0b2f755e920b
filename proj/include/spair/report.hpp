#pragma once

// Code spec files and analysis reports (JSON).
//
// Spec file:
//   {"p": 5, "m": 1, "n": 15, "lambda": 1, "generator": [1, 4, 0, 4, 1]}
//   {"p": 5, "m": 1, "n": 24, "defining_set": [1, 2, ...]}
// Field elements are canonical integers; polynomials are little-endian.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spair/bounds.hpp"
#include "spair/code.hpp"
#include "spair/distance.hpp"

#ifndef SPAIR_VERSION
#define SPAIR_VERSION "1.0.0"
#endif

namespace spair {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = kDefaultFactorSeed;

struct CodeSpec {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::size_t n = 0;
    Symbol lambda = 1;
    std::optional<std::vector<Symbol>> generator;
    std::optional<std::vector<std::uint64_t>> defining_set;
};

inline CodeSpec parse_code_spec(const nlohmann::json& j) {
    auto fail = [](const std::string& msg) -> Error { return Error(Errc::MalformedSpec, msg); };
    if (!j.is_object()) throw fail("spec must be a JSON object");
    CodeSpec s;
    try {
        for (const char* key : {"p", "n"})
            if (!j.contains(key) || !j.at(key).is_number_unsigned()) throw fail(std::string("missing or invalid '") + key + "'");
        s.p = j.at("p").get<std::uint64_t>();
        s.n = j.at("n").get<std::size_t>();
        if (j.contains("m")) {
            if (!j.at("m").is_number_unsigned()) throw fail("invalid 'm'");
            s.m = j.at("m").get<unsigned>();
        }
        const bool has_g = j.contains("generator"), has_t = j.contains("defining_set");
        if (has_g == has_t) throw fail("exactly one of 'generator' and 'defining_set' is required");
        if (has_g) {
            if (!j.at("generator").is_array()) throw fail("'generator' must be an array");
            s.generator = j.at("generator").get<std::vector<Symbol>>();
            if (j.contains("lambda")) {
                if (!j.at("lambda").is_number_unsigned()) throw fail("invalid 'lambda'");
                s.lambda = j.at("lambda").get<Symbol>();
            }
        } else {
            if (!j.at("defining_set").is_array()) throw fail("'defining_set' must be an array");
            s.defining_set = j.at("defining_set").get<std::vector<std::uint64_t>>();
            if (j.contains("lambda") && j.at("lambda") != 1) throw fail("defining sets describe cyclic codes only");
        }
    } catch (const nlohmann::json::exception& e) {
        throw fail(e.what());
    }
    return s;
}

inline ConstacyclicCode build_code(const CodeSpec& s) {
    const Field f = extension_field(s.p, s.m);
    if (s.defining_set) return ConstacyclicCode::from_defining_set(f, s.n, *s.defining_set);
    for (Symbol c : *s.generator)
        if (!f.contains(c)) throw Error(Errc::MalformedSpec, "generator coefficient outside the field");
    if (!f.contains(s.lambda)) throw Error(Errc::MalformedSpec, "lambda outside the field");
    return ConstacyclicCode::from_generator(f, s.n, s.lambda, Poly(f, *s.generator));
}

inline ordered_json code_spec_json(const ConstacyclicCode& c) {
    ordered_json j;
    j["p"] = c.field().characteristic();
    j["m"] = c.field().degree();
    j["n"] = c.length();
    if (c.defining_set()) {
        j["defining_set"] = *c.defining_set();
    } else {
        j["lambda"] = c.lambda();
        j["generator"] = c.generator().coeffs();
    }
    return j;
}

struct BoundReport {
    std::size_t singleton_pair_max_dp = 0;
    struct {
        bool applicable = false;
        std::size_t lower_bound = 0;
        bool exact_when_mds = false;
    } theorem1;
    struct {
        bool applicable = false;
        int condition_used = 0;
        std::size_t lower_bound = 0;
    } theorem2;
    std::optional<std::size_t> bch;
    std::optional<std::size_t> hartmann_tzeng;
    std::optional<ExtendedDistance> castagnoli_d_hamming;
    std::optional<std::vector<std::uint64_t>> defining_set;  // relative to beta
};

/// Every bound that applies to `code`; d_hamming feeds the pair bounds when exact.
inline BoundReport bound_report(const ConstacyclicCode& code, const std::optional<DistanceResult>& d_hamming,
                                const EnumerationOptions& opt = {}) {
    BoundReport b;
    const std::size_t n = code.length(), k = code.dimension();
    b.singleton_pair_max_dp = singleton_pair_max(n, code.field().order(), k);
    if (d_hamming && d_hamming->exact()) {
        const std::size_t d = d_hamming->value;
        if (d >= 2 && d < n) {
            const auto t1 = theorem1_bound(code, d);
            b.theorem1 = {true, t1.lower_bound, t1.exact};
        }
        if (castagnoli_applicable(code)) {
            const auto t2 = theorem2_bound(code, d);
            b.theorem2 = {t2.applicable, t2.condition_used, t2.lower_bound};
        }
    }
    if (castagnoli_applicable(code) && k > 0) {
        b.castagnoli_d_hamming = ExtendedDistance(castagnoli_distance(code, opt).d_hamming);
    }
    if (code.is_cyclic() && code.is_simple_root()) {
        if (code.defining_set()) {
            b.defining_set = *code.defining_set();
        } else {
            b.defining_set = RootContext(code.field(), n).zeros_of(code.generator());
        }
        b.bch = bch_bound(*b.defining_set, n);
        b.hartmann_tzeng = hartmann_tzeng_bound(*b.defining_set, n, code.field().order());
    }
    return b;
}

struct AnalysisReport {
    ConstacyclicCode code;
    std::optional<DistanceResult> d_hamming;
    std::optional<DistanceResult> d_pair;
    BoundReport bounds;
    bool mds_hamming = false;
    bool mds_pair = false;
    bool budget_exceeded = false;
    std::string budget_note;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    double elapsed_ms = 0;
};

struct AnalyzeOptions {
    DistanceStrategy strategy = DistanceStrategy::automatic();
    EnumerationOptions enumeration{};
    std::uint64_t seed = kDefaultSeed;
};

inline AnalysisReport analyze(const ConstacyclicCode& code, const AnalyzeOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport r{code, std::nullopt, std::nullopt, {}, false, false, false, "", opt.seed,
                     opt.enumeration.threads, 0};
    EnumerationOptions eo = opt.enumeration;
    try {
        r.d_hamming = min_hamming_distance(code, opt.strategy, eo);
        eo.budget -= std::min(eo.budget, r.d_hamming->enumerations);
        DistanceStrategy pair_strategy = opt.strategy.kind == DistanceStrategy::Kind::Exhaustive
                                             ? DistanceStrategy::exhaustive()
                                             : DistanceStrategy::bounded();
        r.d_pair = min_pair_distance(code, pair_strategy, eo);
    } catch (const BudgetExceeded& e) {
        r.budget_exceeded = true;
        r.budget_note = e.what();
    }
    r.bounds = bound_report(code, r.d_hamming, opt.enumeration);
    const std::size_t n = code.length(), k = code.dimension();
    if (r.d_hamming && r.d_hamming->exact()) r.mds_hamming = (k + r.d_hamming->value == n + 1);
    if (r.d_pair && r.d_pair->exact()) r.mds_pair = meets_singleton_pair(n, k, r.d_pair->value);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline ordered_json to_json(const DistanceResult& d) {
    ordered_json j;
    j["value"] = d.value;
    j["method"] = std::string(to_string(d.method));
    j["certified"] = d.certified;
    j["lower_bound_only"] = d.lower_bound_only;
    j["enumerations"] = d.enumerations;
    j["witness"] = d.witness ? ordered_json(d.witness->symbols()) : ordered_json(nullptr);
    return j;
}

inline ordered_json to_json(const BoundReport& b) {
    ordered_json j;
    j["singleton_pair_max_dp"] = b.singleton_pair_max_dp;
    j["theorem1"] = {{"applicable", b.theorem1.applicable},
                     {"lower_bound", b.theorem1.lower_bound},
                     {"exact_when_mds", b.theorem1.exact_when_mds}};
    j["theorem2"] = {{"applicable", b.theorem2.applicable},
                     {"condition_used", b.theorem2.condition_used},
                     {"lower_bound", b.theorem2.lower_bound}};
    j["bch"] = b.bch ? ordered_json(*b.bch) : ordered_json(nullptr);
    j["hartmann_tzeng"] = b.hartmann_tzeng ? ordered_json(*b.hartmann_tzeng) : ordered_json(nullptr);
    j["castagnoli_d_hamming"] =
        b.castagnoli_d_hamming ? (b.castagnoli_d_hamming->is_infinite() ? ordered_json("inf")
                                                                        : ordered_json(b.castagnoli_d_hamming->value()))
                               : ordered_json(nullptr);
    return j;
}

inline ordered_json to_json(const AnalysisReport& r) {
    const auto& c = r.code;
    ordered_json j;
    j["toolkit"] = {{"name", "spair"}, {"version", SPAIR_VERSION}};
    j["seed"] = r.seed;
    ordered_json code;
    code["q"] = c.field().order();
    code["p"] = c.field().characteristic();
    code["m"] = c.field().degree();
    code["modulus"] = c.field().modulus();
    code["n"] = c.length();
    code["k"] = c.dimension();
    code["lambda"] = c.lambda();
    code["generator"] = c.generator().coeffs();
    code["defining_set"] = r.bounds.defining_set ? ordered_json(*r.bounds.defining_set) : ordered_json(nullptr);
    if (r.bounds.defining_set) {
        RootContext ctx(c.field(), c.length());
        code["beta"] = {{"value", ctx.beta()},
                        {"field", {{"p", ctx.extension().characteristic()}, {"m", ctx.extension().degree()}}}};
    } else {
        code["beta"] = nullptr;
    }
    j["code"] = code;
    j["d_hamming"] = r.d_hamming ? to_json(*r.d_hamming) : ordered_json(nullptr);
    j["d_pair"] = r.d_pair ? to_json(*r.d_pair) : ordered_json(nullptr);
    j["bounds"] = to_json(r.bounds);
    j["mds_hamming"] = r.mds_hamming;
    j["mds_pair"] = r.mds_pair;
    j["status"] = r.budget_exceeded ? "budget_exceeded" : "ok";
    if (r.budget_exceeded) j["budget_note"] = r.budget_note;
    j["perf"] = {{"elapsed_ms", r.elapsed_ms}, {"threads", r.threads}};
    return j;
}

inline std::string summary(const AnalysisReport& r) {
    std::ostringstream os;
    os << r.code.describe() << "\n";
    auto line = [&](const char* name, const std::optional<DistanceResult>& d) {
        os << "  " << name << ": ";
        if (!d) {
            os << "not determined (budget)\n";
            return;
        }
        os << (d->lower_bound_only ? ">= " : "") << d->value << "  [" << to_string(d->method)
           << (d->certified ? ", certified" : "") << ", " << d->enumerations << " encodings]\n";
    };
    line("d_H", r.d_hamming);
    line("d_p", r.d_pair);
    os << "  Singleton pair bound: d_p <= " << r.bounds.singleton_pair_max_dp << "\n";
    if (r.bounds.theorem1.applicable) os << "  constacyclic pair bound: d_p >= " << r.bounds.theorem1.lower_bound << "\n";
    if (r.bounds.theorem2.applicable)
        os << "  repeated-root pair bound (condition " << r.bounds.theorem2.condition_used
           << "): d_p >= " << r.bounds.theorem2.lower_bound << "\n";
    if (r.bounds.bch) os << "  BCH bound: " << *r.bounds.bch << ", Hartmann-Tzeng bound: " << *r.bounds.hartmann_tzeng << "\n";
    if (r.bounds.castagnoli_d_hamming) os << "  Castagnoli d_H: " << r.bounds.castagnoli_d_hamming->to_string() << "\n";
    os << "  MDS (Hamming): " << (r.mds_hamming ? "yes" : "no") << ", MDS symbol-pair: " << (r.mds_pair ? "yes" : "no")
       << "\n";
    if (r.budget_exceeded) os << "  budget exceeded: " << r.budget_note << "\n";
    return os.str();
}

}  // namespace spair
