#pragma once

// Reproduction suite: known MDS symbol-pair codes and families,
// recomputed and compared against their stated parameters.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spair/bounds.hpp"
#include "spair/constructions.hpp"
#include "spair/distance.hpp"

namespace spair::repro {

enum class Tier { Fast, Full };

inline Tier parse_tier(std::string_view s) {
    if (s == "fast") return Tier::Fast;
    if (s == "full") return Tier::Full;
    throw Error(Errc::BadParameter, "tier must be fast or full, got '" + std::string(s) + "'");
}

struct Check {
    std::string item;
    std::string expected;
    std::string computed;
    bool pass = false;
    bool skipped = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || c.skipped; });
    }
};

struct SuiteOptions {
    Tier tier = Tier::Full;
    unsigned threads = 1;
    /// corrupt one expected value; the suite must then fail
    bool tamper = false;
    std::uint64_t seed = 1;
};

/// A code with exactly computed distances, collected for the cross-checks.
struct CorpusEntry {
    std::string label;
    ConstacyclicCode code;
    std::size_t d_hamming = 0;
    std::size_t d_pair = 0;
};

namespace detail {

class Recorder {
   public:
    explicit Recorder(std::vector<Check>& out) : out_(out) {}

    template <class A, class B>
    bool eq(const std::string& item, const A& expected, const B& computed) {
        return add(item, str(expected), str(computed), expected == computed);
    }
    bool at_most(const std::string& item, double limit, double value, const std::string& unit = "") {
        return add(item, "<= " + str(limit) + unit, str(value) + unit, value <= limit);
    }
    bool truth(const std::string& item, bool ok, const std::string& detail = "") {
        return add(item, "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok);
    }
    void skip(const std::string& item, const std::string& why) { out_.push_back({item, "-", why, false, true}); }

   private:
    template <class T>
    static std::string str(const T& v) {
        std::ostringstream os;
        if constexpr (std::is_same_v<T, bool>)
            os << (v ? "true" : "false");
        else
            os << v;
        return os.str();
    }
    bool add(std::string item, std::string e, std::string c, bool ok) {
        out_.push_back({std::move(item), std::move(e), std::move(c), ok, false});
        return ok;
    }
    std::vector<Check>& out_;
};

inline double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Pair weight straight from the definition: nonzero entries of pi(x).
inline std::size_t definitional_pair_distance(const Word& a, const Word& b) {
    const auto pa = pair_read_vector(a), pb = pair_read_vector(b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) d += pa.pairs[i] != pb.pairs[i];
    return d;
}

/// Every generator g | x^n - 1 other than x^n - 1 itself, in multiplicity order.
inline std::vector<Poly> cyclic_generators(const Field& f, std::size_t n, bool include_full_space) {
    const auto fac = factor(Poly::binomial(f, n, 1)).factors;
    std::vector<Poly> out;
    std::vector<unsigned> e(fac.size(), 0);
    for (;;) {
        Poly g = Poly::one(f);
        for (std::size_t i = 0; i < fac.size(); ++i) g *= pow(fac[i].first, e[i]);
        const std::size_t deg = g.size_degree();
        if (deg < n && (include_full_space || deg > 0)) out.push_back(g);
        std::size_t i = 0;
        while (i < fac.size() && e[i] == fac[i].second) e[i++] = 0;
        if (i == fac.size()) break;
        ++e[i];
    }
    return out;
}

}  // namespace detail

class Suite {
   public:
    explicit Suite(SuiteOptions opt = {}) : opt_(opt) {}

    static constexpr int kCriteria = 11;

    static std::string title(int id) {
        static const char* titles[] = {"",
                                       "[24,3,19] code over GF(5) is MDS symbol-pair (24,23)_5",
                                       "[15,11,3] repeated-root code over GF(5) with d_p = 6",
                                       "[21,14,5] repeated-root code over GF(7) with d_p = 8",
                                       "(3p,7)_p family",
                                       "(3p,8)_p family",
                                       "(3p,6)_p family",
                                       "(n,6)_q family from n | q^2 - 1",
                                       "Castagnoli distance equals enumerated distance",
                                       "d_p = d_H + 1 exactly for Hamming-MDS cyclic codes",
                                       "pair weight definitions and sandwich relation",
                                       "Singleton-type pair bound holds on every code"};
        return id >= 1 && id <= kCriteria ? titles[id] : "";
    }

    CriterionResult run(int id) {
        CriterionResult r{id, title(id), {}, 0};
        const auto t0 = std::chrono::steady_clock::now();
        detail::Recorder rec(r.checks);
        try {
            switch (id) {
                case 1: code_24_3(rec); break;
                case 2: code_15_11(rec); break;
                case 3: code_21_14(rec); break;
                case 4: family_3p_7(rec); break;
                case 5: family_3p_8(rec); break;
                case 6: family_3p_6(rec); break;
                case 7: family_n_6(rec); break;
                case 8: castagnoli_sweep(rec); break;
                case 9: theorem1_sweep(rec); break;
                case 10: definitional(rec); break;
                case 11: singleton(rec); break;
                default: throw Error(Errc::BadParameter, "no criterion " + std::to_string(id));
            }
        } catch (const std::exception& e) {
            rec.truth("completed without error", false, e.what());
        }
        r.seconds = detail::since(t0);
        return r;
    }

    std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_done = {}) {
        std::vector<CriterionResult> out;
        for (int id = 1; id <= kCriteria; ++id) {
            out.push_back(run(id));
            if (on_done) on_done(out.back());
        }
        return out;
    }

   private:
    bool full() const { return opt_.tier == Tier::Full; }
    EnumerationOptions enum_opt() const { return {kDefaultBudget, opt_.threads}; }

    void keep(std::string label, const ConstacyclicCode& c, std::size_t dh, std::size_t dp) {
        constructed_.push_back({std::move(label), c, dh, dp});
    }

    void code_24_3(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        const Field f = prime_field(5);
        std::vector<std::uint64_t> T;
        for (std::uint64_t i = 0; i < 24; ++i)
            if (i != 0 && i != 19 && i != 23) T.push_back(i);
        const auto code = ConstacyclicCode::from_defining_set(f, 24, T);
        rec.eq("k", 3u, code.dimension());
        const auto dh = min_hamming_distance(code, DistanceStrategy::exhaustive(), enum_opt());
        const auto dp = min_pair_distance(code, DistanceStrategy::exhaustive(), enum_opt());
        rec.eq("d_H (exhaustive)", 19u, dh.value);
        rec.eq("d_p (exhaustive)", opt_.tamper ? 24u : 23u, dp.value);
        rec.eq("nonzero codewords enumerated", 124u, dp.enumerations);
        rec.eq("MDS symbol-pair", true, meets_singleton_pair(24, code.dimension(), dp.value));
        rec.eq("BCH bound", 19u, bch_bound(T, 24));
        rec.eq("constacyclic pair bound", 22u, theorem1_bound(code, dh.value).lower_bound);
        rec.at_most("time", 1.0, detail::since(t0), " s");
        keep("[24,3] code", code, dh.value, dp.value);
    }

    void code_15_11(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        const Field f = prime_field(5);
        const Poly g = Poly::from_integers(f, {-1, 1}) * Poly::binomial(f, 3, 1);
        const auto code = ConstacyclicCode::from_generator(f, 15, 1, g);
        rec.eq("k", 11u, code.dimension());
        const auto cast = castagnoli_distance(code, enum_opt());
        const auto dh = min_hamming_distance(code, DistanceStrategy::bounded(), enum_opt());
        rec.eq("d_H (Castagnoli)", 3u, cast.d_hamming);
        rec.eq("d_H (bounded enumeration)", cast.d_hamming, dh.value);
        const auto dp = min_pair_distance(code, DistanceStrategy::bounded(), enum_opt());
        rec.eq("d_p (bounded enumeration)", 6u, dp.value);
        rec.truth("d_p certified", dp.exact());
        rec.eq("MDS symbol-pair", true, meets_singleton_pair(15, 11, dp.value));
        const auto t2 = theorem2_bound(code, dh.value);
        rec.eq("repeated-root pair bound", 6u, t2.applicable ? t2.lower_bound : 0);
        rec.at_most("encodings", 1e7, double(dh.enumerations + dp.enumerations));
        rec.at_most("time", 10.0, detail::since(t0), " s");
        keep("[15,11] code", code, dh.value, dp.value);
    }

    void code_21_14(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        const Field f = prime_field(7);
        const Poly g = pow(Poly::from_integers(f, {-1, 1}), 4) * pow(Poly::from_integers(f, {-2, 1}), 2) *
                       Poly::from_integers(f, {-4, 1});
        const auto code = ConstacyclicCode::from_generator(f, 21, 1, g);
        rec.eq("k", 14u, code.dimension());
        rec.eq("d_H (Castagnoli)", 5u, castagnoli_distance(code, enum_opt()).d_hamming);
        std::vector<std::int64_t> v = {6, 4, 1, 1, 0, 0, 0, 0, 0, 0, 3, 6};
        v.resize(21, 0);
        const Word w = Word::from_integers(f, v);
        rec.truth("given word is a codeword", code.is_member(w));
        rec.eq("pair weight of given word", 8u, pair_weight(w));
        if (!full()) {
            rec.skip("d_p (deepening enumeration)", "full tier");
            return;
        }
        const auto dp = min_pair_distance(code, DistanceStrategy::bounded(), enum_opt());
        rec.eq("d_p (deepening enumeration)", 8u, dp.value);
        rec.truth("d_p certified", dp.exact());
        rec.at_most("time", opt_.threads >= 8 ? 120.0 : 600.0, detail::since(t0), " s");
        keep("[21,14] code", code, 5, dp.value);
    }

    void certify(detail::Recorder& rec, const std::string& label, const Construction& c, double time_limit,
                 std::chrono::steady_clock::time_point t0, double max_encodings = 0) {
        rec.eq(label + " k", c.spec.k, c.code.dimension());
        rec.eq(label + " d_H", c.spec.d_hamming, c.d_hamming.value);
        rec.eq(label + " d_p", c.spec.d_pair, c.d_pair ? c.d_pair->value : 0);
        rec.truth(label + " d_p certified", c.d_pair && c.d_pair->exact());
        rec.eq(label + " MDS symbol-pair", true,
               c.d_pair && meets_singleton_pair(c.code.length(), c.code.dimension(), c.d_pair->value));
        if (max_encodings > 0)
            rec.at_most(label + " encodings", max_encodings,
                        double(c.d_hamming.enumerations + (c.d_pair ? c.d_pair->enumerations : 0)));
        rec.at_most(label + " time", time_limit, detail::since(t0), " s");
        if (c.d_pair) keep(label, c.code, c.d_hamming.value, c.d_pair->value);
    }

    ConstructOptions certifying() const { return {true, true, enum_opt()}; }

    void family_3p_7(detail::Recorder& rec) {
        auto t0 = std::chrono::steady_clock::now();
        certify(rec, "p=5", mds_3p_7(5, certifying()), 10.0, t0, 1e7);
        if (!full()) {
            rec.skip("p=7", "full tier");
            return;
        }
        t0 = std::chrono::steady_clock::now();
        certify(rec, "p=7", mds_3p_7(7, certifying()), 300.0, t0);
    }

    void family_3p_8(detail::Recorder& rec) {
        if (!full()) {
            rec.skip("p=7", "full tier");
            return;
        }
        auto t0 = std::chrono::steady_clock::now();
        const auto c = mds_3p_8(7, certifying());
        certify(rec, "p=7", c, 900.0, t0);
        t0 = std::chrono::steady_clock::now();
        const auto conj = mds_3p_8(7, certifying(), true);
        rec.truth("p=7 other cube root of unity is used", conj.omega != c.omega);
        certify(rec, "p=7 (conjugate)", conj, 900.0, t0);
    }

    void family_3p_6(detail::Recorder& rec) {
        for (std::uint64_t p : {5u, 7u, 11u}) {
            const auto t0 = std::chrono::steady_clock::now();
            certify(rec, "p=" + std::to_string(p), mds_3p_6(p, certifying()), 60.0, t0, p == 11 ? 1e8 : 0);
        }
    }

    void family_n_6(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        for (auto [q, n] : {std::pair<std::uint64_t, std::uint64_t>{3, 8}, {5, 24}, {7, 16}}) {
            const std::string label = "(q,n)=(" + std::to_string(q) + "," + std::to_string(n) + ")";
            const auto c = mds_n_6(q, n, certifying());
            rec.truth(label + " HT bound >= 4", c.hartmann_tzeng.value_or(0) >= 4);
            certify(rec, label, c, 120.0, t0);
        }
        ConstructOptions bound_only{false, false, enum_opt()};
        const auto c = mds_n_6(7, 48, bound_only);
        rec.truth("(q,n)=(7,48) HT bound >= 4", c.hartmann_tzeng.value_or(0) >= 4);
        rec.eq("(q,n)=(7,48) k", 44u, c.code.dimension());
        rec.at_most("total time", 120.0, detail::since(t0), " s");
    }

    /// Codes for criteria 8 and 9, built once. Distances come from enumeration only.
    const std::vector<CorpusEntry>& castagnoli_corpus() {
        if (!castagnoli_corpus_.empty()) return castagnoli_corpus_;
        struct Shape {
            std::size_t ell;
            std::uint64_t p;
            unsigned e;
        };
        for (Shape s : {Shape{2, 3, 1}, {4, 3, 1}, {3, 5, 1}, {2, 5, 1}, {2, 3, 2}}) {
            const Field f = prime_field(s.p);
            std::size_t n = s.ell;
            for (unsigned i = 0; i < s.e; ++i) n *= s.p;
            for (const Poly& g : detail::cyclic_generators(f, n, true)) {
                const auto code = ConstacyclicCode::from_generator(f, n, 1, g);
                const auto dh = min_hamming_distance(code, DistanceStrategy::bounded(), enum_opt());
                const auto dp = min_pair_distance(code, DistanceStrategy::bounded(), enum_opt());
                castagnoli_corpus_.push_back({code.describe(), code, dh.value, dp.value});
            }
        }
        return castagnoli_corpus_;
    }

    const std::vector<CorpusEntry>& sweep_corpus() {
        if (!sweep_corpus_.empty()) return sweep_corpus_;
        for (auto [q, max_n] : {std::pair<std::uint64_t, std::size_t>{2, 15}, {3, 9}}) {
            const Field f = prime_field(q);
            for (std::size_t n = 2; n <= max_n; ++n) {
                for (const Poly& g : detail::cyclic_generators(f, n, false)) {
                    const auto code = ConstacyclicCode::from_generator(f, n, 1, g);
                    const auto dh = min_hamming_distance(code, DistanceStrategy::exhaustive(), enum_opt());
                    const auto dp = min_pair_distance(code, DistanceStrategy::exhaustive(), enum_opt());
                    sweep_corpus_.push_back({code.describe(), code, dh.value, dp.value});
                }
            }
        }
        return sweep_corpus_;
    }

    void castagnoli_sweep(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t agree = 0;
        std::string first_mismatch;
        for (const auto& e : castagnoli_corpus()) {
            const std::size_t c = castagnoli_distance(e.code, enum_opt()).d_hamming;
            if (c == e.d_hamming)
                ++agree;
            else if (first_mismatch.empty())
                first_mismatch = e.label + ": " + std::to_string(c) + " vs " + std::to_string(e.d_hamming);
        }
        rec.eq("codes where Castagnoli = enumeration", castagnoli_corpus_.size(), agree);
        if (!first_mismatch.empty()) rec.truth("first mismatch", false, first_mismatch);
        rec.at_most("time", 120.0, detail::since(t0), " s");
    }

    void theorem1_sweep(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t in_scope = 0, iff_ok = 0, refined = 0, bound_ok = 0;
        std::string first_bad;
        for (const auto& e : sweep_corpus()) {
            const std::size_t n = e.code.length(), k = e.code.dimension();
            if (e.d_hamming < 2 || e.d_hamming >= n) continue;
            ++in_scope;
            const bool lhs = e.d_pair == e.d_hamming + 1, rhs = k == n - e.d_hamming + 1;
            const auto b = theorem1_bound(n, k, e.d_hamming);
            refined += b.refined;
            const bool ok_bound = e.d_pair >= b.lower_bound;
            iff_ok += lhs == rhs;
            bound_ok += ok_bound;
            if ((lhs != rhs || !ok_bound) && first_bad.empty())
                first_bad = e.label + ": d_H=" + std::to_string(e.d_hamming) + " d_p=" + std::to_string(e.d_pair);
        }
        rec.truth("codes in scope", in_scope > 0, std::to_string(in_scope));
        rec.eq("codes with d_p = d_H+1 iff k = n-d_H+1", in_scope, iff_ok);
        rec.eq("codes meeting the pair lower bound", in_scope, bound_ok);
        rec.truth("refined bound exercised", refined > 0, std::to_string(refined));
        if (!first_bad.empty()) rec.truth("first violation", false, first_bad);
        rec.at_most("time", 300.0, detail::since(t0), " s");
    }

    void definitional(detail::Recorder& rec) {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(opt_.seed);
        const std::uint64_t qs[] = {2, 3, 5, 7};
        std::size_t run_ok = 0, dist_ok = 0;
        constexpr std::size_t kWords = 10000;
        for (std::size_t i = 0; i < kWords; ++i) {
            const Field f = prime_field(qs[rng() % 4]);
            const std::size_t n = 2 + rng() % 29;
            // skew toward zeros so that runs of every length appear
            auto draw = [&] {
                std::vector<Symbol> s(n);
                const auto density = rng() % 4;
                for (auto& v : s) v = rng() % 4 <= density ? rng() % f.order() : 0;
                return Word(f, std::move(s));
            };
            const Word a = draw(), b = draw(), zero = Word::zero(f, n);
            run_ok += pair_weight(a) == detail::definitional_pair_distance(a, zero);
            dist_ok += pair_distance(a, b) == pair_weight(a - b) &&
                       pair_distance(a, b) == detail::definitional_pair_distance(a, b);
        }
        rec.eq("random words: run formula = definition", kWords, run_ok);
        rec.eq("random pairs: pair_distance = pair_weight(a-b)", kWords, dist_ok);
        std::size_t in_scope = 0, sandwich_ok = 0;
        for_each_code([&](const CorpusEntry& e) {
            if (e.d_hamming == 0 || e.d_hamming >= e.code.length()) return;
            ++in_scope;
            sandwich_ok += e.d_hamming + 1 <= e.d_pair && e.d_pair <= 2 * e.d_hamming;
        });
        rec.eq("corpus codes with d_H + 1 <= d_p <= 2 d_H", in_scope, sandwich_ok);
        rec.at_most("time", 60.0, detail::since(t0), " s");
    }

    void singleton(detail::Recorder& rec) {
        std::size_t total = 0, ok = 0;
        for_each_code([&](const CorpusEntry& e) {
            ++total;
            ok += e.code.dimension() + e.d_pair <= e.code.length() + 2;
        });
        rec.eq("codes with k <= n - d_p + 2", total, ok);
        rec.truth("constructed codes included", !constructed_.empty(), std::to_string(constructed_.size()));
    }

    void for_each_code(const std::function<void(const CorpusEntry&)>& fn) {
        for (const auto& e : castagnoli_corpus()) fn(e);
        for (const auto& e : sweep_corpus()) fn(e);
        for (const auto& e : constructed_) fn(e);
    }

    SuiteOptions opt_;
    std::vector<CorpusEntry> castagnoli_corpus_, sweep_corpus_, constructed_;
};

inline void print_result(std::ostream& os, const CriterionResult& r, bool details) {
    os << (r.pass() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " ("
       << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    if (!details && r.pass()) return;
    for (const auto& c : r.checks) {
        os << "      " << (c.skipped ? "skip" : c.pass ? "ok  " : "BAD ") << " " << c.item;
        if (c.skipped)
            os << "  (" << c.computed << ")\n";
        else
            os << "  expected " << c.expected << ", computed " << c.computed << "\n";
    }
}

}  // namespace spair::repro
