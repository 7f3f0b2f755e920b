#pragma once

// Strategy front end for the minimum-distance engines.

#include <string>
#include <string_view>

#include "spair/bounds.hpp"
#include "spair/code.hpp"
#include "spair/enumerate.hpp"

namespace spair {

struct DistanceStrategy {
    enum class Kind { Auto, Exhaustive, Bounded, BoundedWeight, Castagnoli };
    Kind kind = Kind::Auto;
    unsigned weight = 0;  // BoundedWeight only

    static DistanceStrategy automatic() { return {Kind::Auto, 0}; }
    static DistanceStrategy exhaustive() { return {Kind::Exhaustive, 0}; }
    /// iterative deepening; always exact
    static DistanceStrategy bounded() { return {Kind::Bounded, 0}; }
    static DistanceStrategy bounded_weight(unsigned w) { return {Kind::BoundedWeight, w}; }
    static DistanceStrategy castagnoli() { return {Kind::Castagnoli, 0}; }

    static DistanceStrategy parse(std::string_view s) {
        if (s == "auto") return automatic();
        if (s == "exhaustive") return exhaustive();
        if (s == "bounded") return bounded();
        if (s == "castagnoli") return castagnoli();
        throw Error(Errc::BadParameter, "unknown strategy '" + std::string(s) + "'");
    }
};

/// True when the code is cyclic with n = ell p^e, ell > 1, e >= 1.
inline bool castagnoli_applicable(const ConstacyclicCode& code) {
    if (!code.is_cyclic()) return false;
    const std::uint64_t p = code.field().characteristic();
    std::size_t n = code.length();
    if (n % p != 0) return false;
    while (n % p == 0) n /= p;
    return n > 1;
}

inline DistanceResult min_hamming_distance(const ConstacyclicCode& code,
                                           DistanceStrategy strategy = DistanceStrategy::automatic(),
                                           const EnumerationOptions& opt = {}) {
    if (code.dimension() == 0) throw Error(Errc::ZeroCode, "distance of the zero code is undefined");
    using K = DistanceStrategy::Kind;
    if (strategy.kind == K::Auto) strategy = castagnoli_applicable(code) ? DistanceStrategy::castagnoli()
                                                                         : DistanceStrategy::bounded();
    switch (strategy.kind) {
        case K::Castagnoli: {
            if (!castagnoli_applicable(code))
                throw Error(Errc::StrategyInapplicable, "castagnoli needs a repeated-root cyclic code with ell > 1");
            const auto c = castagnoli_distance(code, opt);
            return {c.d_hamming, DistanceMethod::Castagnoli, true, false, c.enumerations, std::nullopt};
        }
        case K::Exhaustive: return hamming_exhaustive(InformationSetEnumerator(code, false), opt);
        case K::BoundedWeight: return hamming_bounded(InformationSetEnumerator(code), strategy.weight, opt);
        case K::Bounded:
        case K::Auto: break;
    }
    return hamming_deepening(InformationSetEnumerator(code), opt);
}

inline DistanceResult min_pair_distance(const ConstacyclicCode& code,
                                        DistanceStrategy strategy = DistanceStrategy::automatic(),
                                        const EnumerationOptions& opt = {}) {
    if (code.dimension() == 0) throw Error(Errc::ZeroCode, "distance of the zero code is undefined");
    using K = DistanceStrategy::Kind;
    switch (strategy.kind) {
        case K::Exhaustive: return pair_exhaustive(InformationSetEnumerator(code, false), opt);
        case K::Auto:
        case K::Bounded: return pair_deepening(InformationSetEnumerator(code), opt);
        case K::BoundedWeight:
        case K::Castagnoli: break;
    }
    throw Error(Errc::StrategyInapplicable, "pair distance supports exhaustive or bounded strategies");
}

}  // namespace spair
