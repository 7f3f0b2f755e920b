#pragma once

// MDS symbol-pair code families and a small exhaustive search over cyclic
// codes of a given length.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spair/bounds.hpp"
#include "spair/distance.hpp"

namespace spair {

enum class Family { Mds3p7, Mds3p8, Mds3p6, MdsN6 };

constexpr std::string_view to_string(Family f) {
    switch (f) {
        case Family::Mds3p7: return "mds_3p_7";
        case Family::Mds3p8: return "mds_3p_8";
        case Family::Mds3p6: return "mds_3p_6";
        case Family::MdsN6: return "mds_n_6";
    }
    return "unknown";
}

inline Family parse_family(std::string_view s) {
    for (Family f : {Family::Mds3p7, Family::Mds3p8, Family::Mds3p6, Family::MdsN6})
        if (to_string(f) == s) return f;
    throw Error(Errc::BadParameter, "unknown family '" + std::string(s) + "'");
}

struct FamilySpec {
    Family family = Family::Mds3p6;
    std::uint64_t q = 0;  // field size (= p for the 3p families)
    std::size_t n = 0, k = 0, d_hamming = 0, d_pair = 0;
};

struct ConstructOptions {
    /// certify d_p by enumeration before returning
    bool certify_pair = false;
    /// mds_n_6 only: certify d_H by enumeration rather than by the HT bound alone
    bool enumerate_hamming = true;
    EnumerationOptions enumeration{};
};

struct Construction {
    ConstacyclicCode code;
    FamilySpec spec;
    DistanceResult d_hamming;
    std::optional<DistanceResult> d_pair;
    std::optional<Symbol> omega;  // mds_3p_8
    std::optional<std::size_t> hartmann_tzeng;  // mds_n_6
};

namespace detail {

inline void require_prime_at_least(std::uint64_t p, std::uint64_t lo, std::string_view family) {
    if (!nt::is_prime(p) || p < lo)
        throw Error(Errc::BadParameter, std::string(family) + ": p must be a prime >= " + std::to_string(lo) +
                                            ", got " + std::to_string(p));
}

inline Poly linear_int(const Field& f, std::int64_t root) { return Poly::from_integers(f, {-root, 1}); }

inline void check_expected(const FamilySpec& spec, const DistanceResult& d, std::string_view what) {
    if (d.exact() && d.value != (what == "d_H" ? spec.d_hamming : spec.d_pair))
        throw Error(Errc::VerificationFailed, std::string(to_string(spec.family)) + ": computed " + std::string(what) +
                                                  " = " + std::to_string(d.value));
    if (d.lower_bound_only && d.value > (what == "d_H" ? spec.d_hamming : spec.d_pair))
        throw Error(Errc::VerificationFailed, std::string(to_string(spec.family)) + ": lower bound exceeds claim");
}

inline Construction finish(ConstacyclicCode code, FamilySpec spec, const ConstructOptions& opt,
                           std::optional<DistanceResult> d_hamming = std::nullopt) {
    if (code.dimension() != spec.k)
        throw Error(Errc::VerificationFailed, std::string(to_string(spec.family)) + ": dimension " +
                                                  std::to_string(code.dimension()));
    DistanceResult dh = d_hamming ? *d_hamming : min_hamming_distance(code, DistanceStrategy::automatic(), opt.enumeration);
    check_expected(spec, dh, "d_H");
    Construction c{std::move(code), spec, dh, std::nullopt, std::nullopt, std::nullopt};
    if (opt.certify_pair) {
        c.d_pair = min_pair_distance(c.code, DistanceStrategy::bounded(), opt.enumeration);
        check_expected(spec, *c.d_pair, "d_p");
    }
    return c;
}

}  // namespace detail

/// Cyclic [3p, 3p-5, 4] code over GF(p) with g = (x-1)^3 (x^2+x+1); d_p = 7.
inline Construction mds_3p_7(std::uint64_t p, const ConstructOptions& opt = {}) {
    detail::require_prime_at_least(p, 5, "mds_3p_7");
    const Field f = prime_field(p);
    const Poly g = pow(detail::linear_int(f, 1), 3) * Poly::from_integers(f, {1, 1, 1});
    const std::size_t n = 3 * p;
    return detail::finish(ConstacyclicCode::from_generator(f, n, 1, g), {Family::Mds3p7, p, n, n - 5, 4, 7}, opt);
}

/// Cyclic [3p, 3p-6, 4] code over GF(p), p = 1 mod 3, with
/// g = (x-1)^3 (x-w)^2 (x-w^2); d_p = 8. `conjugate` swaps w and w^2.
inline Construction mds_3p_8(std::uint64_t p, const ConstructOptions& opt = {}, bool conjugate = false) {
    if (!nt::is_prime(p) || p % 3 != 1)
        throw Error(Errc::BadParameter, "mds_3p_8: p must be a prime with 3 | p - 1, got " + std::to_string(p));
    const Field f = prime_field(p);
    Symbol w = primitive_cube_root(p).value();
    if (conjugate) w = f.mul(w, w);
    const Symbol w2 = f.mul(w, w);
    const Poly g = pow(detail::linear_int(f, 1), 3) * pow(Poly::linear(f, w), 2) * Poly::linear(f, w2);
    const std::size_t n = 3 * p;
    auto c = detail::finish(ConstacyclicCode::from_generator(f, n, 1, g), {Family::Mds3p8, p, n, n - 6, 4, 8}, opt);
    c.omega = w;
    return c;
}

/// Cyclic [3p, 3p-4, 3] code over GF(p) with g = (x-1)(x^3-1); d_p = 6.
inline Construction mds_3p_6(std::uint64_t p, const ConstructOptions& opt = {}) {
    detail::require_prime_at_least(p, 5, "mds_3p_6");
    const Field f = prime_field(p);
    const Poly g = detail::linear_int(f, 1) * Poly::binomial(f, 3, 1);
    const std::size_t n = 3 * p;
    return detail::finish(ConstacyclicCode::from_generator(f, n, 1, g), {Family::Mds3p6, p, n, n - 4, 3, 6}, opt);
}

/// Simple-root cyclic [n, n-4, 4] code over GF(q) with defining set
/// C_0 u C_1 u C_{q+1}, for n | q^2 - 1 and n >= q + 4; d_p = 6.
inline Construction mds_n_6(std::uint64_t q, std::uint64_t n, const ConstructOptions& opt = {}) {
    auto [p, m] = nt::prime_power(q);
    if (p == 0 || q < 3) throw Error(Errc::BadParameter, "mds_n_6: q must be a prime power >= 3");
    if ((q * q - 1) % n != 0) throw Error(Errc::BadParameter, "mds_n_6: n must divide q^2 - 1");
    if (n < q + 4) throw Error(Errc::BadParameter, "mds_n_6: n must be >= q + 4");
    const Field f = field_of_order(q);
    const auto c0 = cyclotomic_coset(0, n, q), c1 = cyclotomic_coset(1, n, q), cq1 = cyclotomic_coset(q + 1, n, q);
    if (c1.size() != 2) throw Error(Errc::VerificationFailed, "mds_n_6: |C_1| != 2");
    if (cq1.size() != 1) throw Error(Errc::VerificationFailed, "mds_n_6: |C_{q+1}| != 1");
    std::vector<std::uint64_t> T;
    for (const auto* c : {&c0, &c1, &cq1}) T.insert(T.end(), c->members.begin(), c->members.end());
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    if (T.size() != 4) throw Error(Errc::VerificationFailed, "mds_n_6: defining set does not have 4 elements");
    auto code = ConstacyclicCode::from_defining_set(f, n, T);
    const std::size_t ht = hartmann_tzeng_bound(T, n, q);
    if (ht < 4) throw Error(Errc::VerificationFailed, "mds_n_6: Hartmann-Tzeng bound below 4");
    std::optional<DistanceResult> dh;
    if (!opt.enumerate_hamming) dh = DistanceResult{ht, DistanceMethod::BoundedWeight, true, true, 0, std::nullopt};
    const FamilySpec spec{Family::MdsN6, q, n, n - 4, 4, 6};
    auto c = detail::finish(std::move(code), spec, opt, dh);
    c.hartmann_tzeng = ht;
    return c;
}

inline Construction construct(Family family, std::uint64_t p_or_q, std::uint64_t n, const ConstructOptions& opt = {}) {
    switch (family) {
        case Family::Mds3p7: return mds_3p_7(p_or_q, opt);
        case Family::Mds3p8: return mds_3p_8(p_or_q, opt);
        case Family::Mds3p6: return mds_3p_6(p_or_q, opt);
        case Family::MdsN6: return mds_n_6(p_or_q, n, opt);
    }
    throw Error(Errc::BadParameter, "unknown family");
}

// ---------------------------------------------------------------------------

struct SearchRow {
    Poly generator;
    std::vector<unsigned> multiplicities;  // over the sorted factor list of x^n - 1
    std::size_t k = 0;
    std::optional<DistanceResult> d_hamming;
    std::optional<DistanceResult> d_pair;
    bool mds_pair = false;
    bool budget_exhausted = false;
};

struct SearchResult {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::vector<std::pair<Poly, unsigned>> factors;  // of x^n - 1
    std::vector<SearchRow> rows;
    bool budget_exhausted = false;
    std::uint64_t enumerations = 0;
};

/// Every proper nonzero cyclic code of length n over GF(q), in lexicographic
/// order of multiplicity vectors over the canonical factor list of x^n - 1.
inline SearchResult search_optimal_cyclic(std::uint64_t q, std::size_t n, std::size_t max_codes = 0,
                                          std::uint64_t budget = kDefaultBudget, unsigned threads = 1,
                                          std::uint64_t seed = kDefaultFactorSeed) {
    const Field f = field_of_order(q);
    if (n < 2) throw Error(Errc::BadParameter, "search needs n >= 2");
    SearchResult out;
    out.q = q;
    out.n = n;
    out.factors = factor(Poly::binomial(f, n, 1), seed).factors;
    const std::size_t s = out.factors.size();
    std::vector<unsigned> e(s, 0);
    std::uint64_t spent = 0;
    for (;;) {
        Poly g = Poly::one(f);
        for (std::size_t i = 0; i < s; ++i) g *= pow(out.factors[i].first, e[i]);
        const std::size_t k = n - g.size_degree();
        if (k != 0 && k != n) {
            if (max_codes && out.rows.size() >= max_codes) break;
            SearchRow row{g, e, k, std::nullopt, std::nullopt, false, false};
            const auto code = ConstacyclicCode::from_generator(f, n, 1, g);
            try {
                EnumerationOptions opt{budget > spent ? budget - spent : 0, threads};
                row.d_hamming = min_hamming_distance(code, DistanceStrategy::automatic(), opt);
                spent += row.d_hamming->enumerations;
                opt.budget = budget > spent ? budget - spent : 0;
                row.d_pair = min_pair_distance(code, DistanceStrategy::bounded(), opt);
                spent += row.d_pair->enumerations;
                row.mds_pair = row.d_pair->exact() && meets_singleton_pair(n, k, row.d_pair->value);
            } catch (const BudgetExceeded& ex) {
                spent += ex.enumerations;
                row.budget_exhausted = true;
                out.budget_exhausted = true;
            }
            out.rows.push_back(std::move(row));
        }
        // next multiplicity vector (lexicographic, last index fastest)
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (e[i] < out.factors[i].second) {
                ++e[i];
                std::fill(e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end(), 0u);
                break;
            }
            if (i == 0) {
                i = s + 1;
                break;
            }
        }
        if (i == s + 1 || s == 0) break;
    }
    out.enumerations = spent;
    return out;
}

}  // namespace spair
