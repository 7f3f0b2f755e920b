#pragma once

// Lower and upper bounds on Hamming and symbol-pair distances of
// constacyclic codes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "spair/code.hpp"
#include "spair/enumerate.hpp"
#include "spair/poly.hpp"

namespace spair {

/// A distance that may be infinite (the zero code). Infinity absorbs
/// multiplication and never wins a minimum.
class ExtendedDistance {
   public:
    constexpr ExtendedDistance() = default;
    constexpr explicit ExtendedDistance(std::size_t v) : value_(v), infinite_(false) {}
    static constexpr ExtendedDistance infinity() { return ExtendedDistance(); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr std::size_t value() const { return value_; }

    friend constexpr ExtendedDistance operator*(std::size_t factor, ExtendedDistance d) {
        return d.infinite_ ? d : ExtendedDistance(factor * d.value_);
    }
    friend constexpr bool operator<(ExtendedDistance a, ExtendedDistance b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator==(ExtendedDistance, ExtendedDistance) = default;

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

   private:
    std::size_t value_ = 0;
    bool infinite_ = true;
};

/// Largest d_p allowed by q^k <= q^(n - d_p + 2), capped at n.
inline std::size_t singleton_pair_max(std::size_t n, std::uint64_t q, std::size_t k) {
    if (q < 2) throw Error(Errc::BadParameter, "q must be >= 2");
    if (k > n) throw Error(Errc::BadParameter, "k > n");
    return std::min(n, n - k + 2);
}

inline bool meets_singleton_pair(std::size_t n, std::size_t k, std::size_t d_pair) { return k + d_pair == n + 2; }

struct Theorem1Bound {
    std::size_t lower_bound = 0;
    /// true when the code is MDS and the bound equals d_p exactly
    bool exact = false;
    /// the n - d_H >= 2k - 1 refinement was used
    bool refined = false;
};

/// Lower bound on d_p of an [n, k, d_H] constacyclic code with 2 <= d_H < n.
inline Theorem1Bound theorem1_bound(std::size_t n, std::size_t k, std::size_t d_hamming) {
    if (d_hamming < 2 || d_hamming >= n)
        throw Error(Errc::OutOfScope, "needs 2 <= d_H < n, got d_H = " + std::to_string(d_hamming));
    if (k == n - d_hamming + 1) return {d_hamming + 1, true, false};
    if (k > 1 && n - d_hamming >= 2 * k - 1) return {d_hamming + 3, false, true};
    return {d_hamming + 2, false, false};
}

inline Theorem1Bound theorem1_bound(const ConstacyclicCode& code, std::size_t d_hamming) {
    return theorem1_bound(code.length(), code.dimension(), d_hamming);
}

/// Product of (digit + 1) over the base-p digits of t.
inline std::uint64_t radix_p_product(std::uint64_t t, std::uint64_t p) {
    if (p < 2) throw Error(Errc::BadParameter, "radix must be >= 2");
    std::uint64_t r = 1;
    while (t) {
        r *= t % p + 1;
        t /= p;
    }
    return r;
}

/// n = ell p^e with gcd(ell, p) = 1, ell > 1, e >= 1, and the multiplicity of
/// each irreducible factor of x^ell - 1 in g.
struct RepeatedRootShape {
    std::size_t ell = 0;
    unsigned e = 0;
    std::uint64_t p = 0;
    std::uint64_t p_power = 1;  // p^e
    std::vector<std::pair<Poly, unsigned>> factors;  // every irreducible factor of x^ell - 1, multiplicity may be 0

    bool divisible_by_x_ell_minus_one() const {
        return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.second >= 1; });
    }
};

inline RepeatedRootShape repeated_root_shape(const ConstacyclicCode& code) {
    if (!code.is_cyclic()) throw Error(Errc::NotRepeatedRoot, "only cyclic codes (lambda = 1)");
    const std::uint64_t p = code.field().characteristic();
    RepeatedRootShape s;
    s.p = p;
    std::size_t ell = code.length();
    while (ell % p == 0) {
        ell /= p;
        ++s.e;
        s.p_power *= p;
    }
    s.ell = ell;
    if (s.e == 0) throw Error(Errc::NotRepeatedRoot, "length is coprime to the characteristic");
    if (ell <= 1) throw Error(Errc::NotRepeatedRoot, "needs ell > 1");
    const Field& f = code.field();
    for (auto& [m, mult] : factor(Poly::binomial(f, ell, 1)).factors) {
        (void)mult;
        s.factors.emplace_back(m, multiplicity(code.generator(), m));
    }
    return s;
}

struct Theorem2Bound {
    bool applicable = false;
    int condition_used = 0;  // 1 or 2; 0 when inapplicable
    std::size_t lower_bound = 0;
};

/// d_p >= d_H + 3 for prime d_H when ell < d_H < n - k, or when
/// (x^ell - 1) | g and 2 < d_H < n - k.
inline Theorem2Bound theorem2_bound(const ConstacyclicCode& code, const RepeatedRootShape& shape,
                                    std::size_t d_hamming) {
    const std::size_t n = code.length(), k = code.dimension();
    if (k == 0 || !nt::is_prime(d_hamming) || n < k) return {};
    const std::size_t slack = n - k;
    if (shape.ell < d_hamming && d_hamming < slack) return {true, 1, d_hamming + 3};
    if (shape.divisible_by_x_ell_minus_one() && 2 < d_hamming && d_hamming < slack) return {true, 2, d_hamming + 3};
    return {};
}

inline Theorem2Bound theorem2_bound(const ConstacyclicCode& code, std::size_t d_hamming) {
    return theorem2_bound(code, repeated_root_shape(code), d_hamming);
}

/// Simple-root residue code of length ell generated by the factors of g with
/// multiplicity > t.
struct ResidueCode {
    std::uint64_t t = 0;
    Poly generator;
    std::optional<ConstacyclicCode> code;  // empty for the zero code
    ExtendedDistance d_hamming;
    std::uint64_t enumerations = 0;
};

inline ResidueCode residue_code(const ConstacyclicCode& code, const RepeatedRootShape& shape, std::uint64_t t,
                                const EnumerationOptions& opt = {}) {
    const Field& f = code.field();
    ResidueCode r;
    r.t = t;
    r.generator = Poly::one(f);
    for (const auto& [m, e] : shape.factors)
        if (e > t) r.generator *= m;
    if (r.generator == Poly::binomial(f, shape.ell, 1)) {
        r.d_hamming = ExtendedDistance::infinity();
        return r;
    }
    r.code = ConstacyclicCode::from_generator(f, shape.ell, 1, r.generator);
    if (r.generator.is_one()) {
        r.d_hamming = ExtendedDistance(1);
        return r;
    }
    const auto d = hamming_deepening(InformationSetEnumerator(*r.code), opt);
    r.d_hamming = ExtendedDistance(d.value);
    r.enumerations = d.enumerations;
    return r;
}

inline ResidueCode residue_code(const ConstacyclicCode& code, std::uint64_t t) {
    return residue_code(code, repeated_root_shape(code), t);
}

struct CastagnoliResult {
    std::size_t d_hamming = 0;
    std::uint64_t minimizing_t = 0;
    std::uint64_t enumerations = 0;
    std::vector<ExtendedDistance> terms;  // P_t * d_H(residue_t), t = 0..p^e - 1
};

/// d_H = min over 0 <= t < p^e of P_t * d_H(residue_t).
inline CastagnoliResult castagnoli_distance(const ConstacyclicCode& code, const EnumerationOptions& opt = {}) {
    if (code.dimension() == 0) throw Error(Errc::ZeroCode, "zero code");
    const RepeatedRootShape shape = repeated_root_shape(code);
    CastagnoliResult out;
    std::map<std::vector<unsigned>, ExtendedDistance> by_pattern;
    ExtendedDistance best = ExtendedDistance::infinity();
    for (std::uint64_t t = 0; t < shape.p_power; ++t) {
        // residue codes depend on t only through which multiplicities exceed t
        std::vector<unsigned> pattern;
        for (const auto& fe : shape.factors) pattern.push_back(fe.second > t ? 1u : 0u);
        ExtendedDistance d;
        if (auto it = by_pattern.find(pattern); it != by_pattern.end()) {
            d = it->second;
        } else {
            auto rc = residue_code(code, shape, t, opt);
            out.enumerations += rc.enumerations;
            d = rc.d_hamming;
            by_pattern.emplace(pattern, d);
        }
        const ExtendedDistance term = radix_p_product(t, shape.p) * d;
        out.terms.push_back(term);
        if (term < best) {
            best = term;
            out.minimizing_t = t;
        }
    }
    if (best.is_infinite()) throw Error(Errc::ZeroCode, "every residue code is zero");
    out.d_hamming = best.value();
    return out;
}

namespace detail {

inline std::vector<bool> membership(const std::vector<std::uint64_t>& T, std::uint64_t n) {
    std::vector<bool> in(n, false);
    for (auto j : T) in[j % n] = true;
    return in;
}

// run[x] = number of consecutive residues x, x+1, ... in T (capped at n)
inline std::vector<std::uint64_t> runs_from(const std::vector<bool>& in) {
    const std::uint64_t n = in.size();
    std::vector<std::uint64_t> run(n, 0);
    if (std::all_of(in.begin(), in.end(), [](bool b) { return b; })) {
        std::fill(run.begin(), run.end(), n);
        return run;
    }
    // start just after a gap and sweep backwards twice to wrap
    for (std::uint64_t pass = 0; pass < 2; ++pass)
        for (std::uint64_t i = n; i-- > 0;) {
            const std::uint64_t next = run[(i + 1) % n];
            run[i] = in[i] ? std::min<std::uint64_t>(next + 1, n) : 0;
        }
    return run;
}

}  // namespace detail

/// 1 + the longest run of cyclically consecutive residues contained in T.
inline std::size_t bch_bound(const std::vector<std::uint64_t>& T, std::uint64_t n) {
    if (n == 0) throw Error(Errc::BadParameter, "n must be positive");
    const auto run = detail::runs_from(detail::membership(T, n));
    return 1 + static_cast<std::size_t>(*std::max_element(run.begin(), run.end()));
}

/// Hartmann-Tzeng bound by exhaustive search over b, delta, step a with
/// gcd(a, n) < delta, and s: if {b + i + j a : 0 <= i <= delta-2, 0 <= j <= s}
/// lies in T then d_H >= delta + s.
inline std::size_t hartmann_tzeng_bound(const std::vector<std::uint64_t>& T, std::uint64_t n, std::uint64_t q) {
    require_coprime(n, q);
    const auto in = detail::membership(T, n);
    const auto run = detail::runs_from(in);
    std::size_t best = 1 + static_cast<std::size_t>(*std::max_element(run.begin(), run.end()));
    if (run[0] == n) return best;  // T = Z_n
    for (std::uint64_t b = 0; b < n; ++b) {
        for (std::uint64_t delta = 2; delta <= run[b] + 1; ++delta) {
            for (std::uint64_t a = 1; a < n; ++a) {
                const std::uint64_t g = std::gcd(a, n);
                if (g >= delta) continue;
                const std::uint64_t orbit = n / g;
                std::uint64_t s = 0;
                while (s + 1 < orbit && run[(b + (s + 1) * a) % n] >= delta - 1) ++s;
                best = std::max<std::size_t>(best, delta + s);
            }
        }
    }
    return best;
}

}  // namespace spair
