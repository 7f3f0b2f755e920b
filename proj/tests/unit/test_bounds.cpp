#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "spair/bounds.hpp"
#include "spair/distance.hpp"

using namespace spair;

namespace {

Poly P(const Field& f, std::vector<std::int64_t> c) { return Poly::from_integers(f, c); }

ConstacyclicCode code_15_11() {
    const Field f = prime_field(5);
    return ConstacyclicCode::from_generator(f, 15, 1, P(f, {-1, 1}) * Poly::binomial(f, 3, 1));
}

// digits of t in base p, multiplied as (digit + 1)
std::uint64_t radix_oracle(std::uint64_t t, std::uint64_t p) {
    std::vector<std::uint64_t> digits;
    for (; t; t /= p) digits.push_back(t % p);
    return std::accumulate(digits.begin(), digits.end(), std::uint64_t{1},
                           [](std::uint64_t acc, std::uint64_t d) { return acc * (d + 1); });
}

// direct search over every (b, delta, a, s) with explicit set membership
std::size_t ht_oracle(const std::vector<std::uint64_t>& T, std::uint64_t n) {
    auto in = [&](std::uint64_t x) { return std::find(T.begin(), T.end(), x % n) != T.end(); };
    std::size_t best = 1;
    for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t delta = 2; delta <= n + 1; ++delta)
            for (std::uint64_t a = 1; a <= n; ++a) {
                if (std::gcd(a, n) >= delta) continue;
                for (std::uint64_t s = 0; s < n / std::gcd(a, n); ++s) {
                    bool all = true;
                    for (std::uint64_t i = 0; i + 2 <= delta && all; ++i)
                        for (std::uint64_t j = 0; j <= s && all; ++j) all = in(b + i + j * a);
                    if (!all) break;
                    best = std::max<std::size_t>(best, delta + s);
                }
            }
    return best;
}

}  // namespace

TEST(Singleton, PairBound) {
    EXPECT_EQ(singleton_pair_max(15, 5, 11), 6u);
    EXPECT_EQ(singleton_pair_max(24, 5, 3), 23u);
    EXPECT_EQ(singleton_pair_max(7, 2, 1), 7u);
    EXPECT_TRUE(meets_singleton_pair(15, 11, 6));
    EXPECT_FALSE(meets_singleton_pair(15, 11, 5));
    EXPECT_THROW(singleton_pair_max(3, 5, 4), Error);
}

TEST(ConstacyclicPairBound, Cases) {
    EXPECT_EQ(theorem1_bound(15, 11, 3).lower_bound, 5u);
    EXPECT_FALSE(theorem1_bound(15, 11, 3).exact);
    const auto mds = theorem1_bound(7, 6, 2);
    EXPECT_EQ(mds.lower_bound, 3u);
    EXPECT_TRUE(mds.exact);
    const auto refined = theorem1_bound(24, 3, 19);
    EXPECT_EQ(refined.lower_bound, 22u);
    EXPECT_TRUE(refined.refined);
    EXPECT_EQ(theorem1_bound(8, 4, 4).lower_bound, 6u);
    try {
        theorem1_bound(5, 1, 5);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OutOfScope);
    }
    EXPECT_THROW(theorem1_bound(5, 4, 1), Error);
}

TEST(RadixProduct, Examples) {
    EXPECT_EQ(radix_p_product(3, 5), 4u);
    EXPECT_EQ(radix_p_product(7, 2), 8u);
    EXPECT_EQ(radix_p_product(0, 3), 1u);
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t t = 0; t < 500; ++t) ASSERT_EQ(radix_p_product(t, p), radix_oracle(t, p));
}

TEST(RepeatedRoot, ShapeAndResidues) {
    const auto c = code_15_11();
    const auto s = repeated_root_shape(c);
    EXPECT_EQ(s.ell, 3u);
    EXPECT_EQ(s.e, 1u);
    EXPECT_EQ(s.p_power, 5u);
    ASSERT_EQ(s.factors.size(), 2u);
    EXPECT_TRUE(s.divisible_by_x_ell_minus_one());

    const auto r0 = residue_code(c, 0);
    EXPECT_TRUE(r0.d_hamming.is_infinite());
    EXPECT_FALSE(r0.code.has_value());
    const auto r1 = residue_code(c, 1);
    EXPECT_EQ(r1.d_hamming, ExtendedDistance(2));
    const auto r2 = residue_code(c, 2);
    EXPECT_EQ(r2.d_hamming, ExtendedDistance(1));
    EXPECT_TRUE(r2.generator.is_one());

    const auto cast = castagnoli_distance(c);
    EXPECT_EQ(cast.d_hamming, 3u);
    ASSERT_EQ(cast.terms.size(), 5u);
    EXPECT_TRUE(cast.terms[0].is_infinite());
    EXPECT_EQ(cast.terms[1], ExtendedDistance(4));
    EXPECT_EQ(cast.terms[2], ExtendedDistance(3));
    EXPECT_EQ(cast.minimizing_t, 2u);

    const Field f = prime_field(5);
    EXPECT_THROW(repeated_root_shape(ConstacyclicCode::from_generator(f, 4, 1, P(f, {-1, 1}))), Error);
    EXPECT_THROW(repeated_root_shape(ConstacyclicCode::from_generator(f, 25, 1, P(f, {-1, 1}))), Error);
}

TEST(RepeatedRootPairBound, Conditions) {
    const auto c = code_15_11();
    const auto t = theorem2_bound(c, 3);
    EXPECT_TRUE(t.applicable);
    EXPECT_EQ(t.condition_used, 2);
    EXPECT_EQ(t.lower_bound, 6u);
    EXPECT_FALSE(theorem2_bound(c, 4).applicable);

    const Field f = prime_field(7);
    const Poly g = pow(P(f, {-1, 1}), 4) * pow(P(f, {-2, 1}), 2) * P(f, {-4, 1});
    const auto ex3 = ConstacyclicCode::from_generator(f, 21, 1, g);
    const auto t3 = theorem2_bound(ex3, 5);
    EXPECT_TRUE(t3.applicable);
    EXPECT_EQ(t3.condition_used, 1);
    EXPECT_EQ(t3.lower_bound, 8u);
}

TEST(Castagnoli, AgreesWithEnumeration) {
    struct Shape {
        std::size_t ell;
        std::uint64_t p;
        std::size_t pe;
    };
    for (Shape s : {Shape{2, 3, 3}, {4, 3, 3}, {3, 5, 5}, {2, 5, 5}, {2, 3, 9}, {3, 2, 4}, {5, 2, 2}}) {
        const Field f = prime_field(s.p);
        const std::size_t n = s.ell * s.pe;
        const auto fac = factor(Poly::binomial(f, n, 1)).factors;
        std::vector<unsigned> e(fac.size(), 0);
        for (;;) {
            Poly g = Poly::one(f);
            for (std::size_t i = 0; i < fac.size(); ++i) g *= pow(fac[i].first, e[i]);
            const auto c = ConstacyclicCode::from_generator(f, n, 1, g);
            if (c.dimension() > 0) {
                const auto enumerated = min_hamming_distance(c, DistanceStrategy::bounded());
                ASSERT_EQ(castagnoli_distance(c).d_hamming, enumerated.value) << c.describe();
                const std::size_t dh = enumerated.value, dp = min_pair_distance(c).value;
                const auto t2 = theorem2_bound(c, dh);
                if (t2.applicable) {
                    EXPECT_GE(dp, t2.lower_bound) << c.describe();
                }
            }
            std::size_t i = 0;
            while (i < fac.size() && e[i] == fac[i].second) e[i++] = 0;
            if (i == fac.size()) break;
            ++e[i];
        }
    }
}

TEST(BchHartmannTzeng, Examples) {
    EXPECT_EQ(hartmann_tzeng_bound({0, 1, 3, 4}, 8, 3), 4u);
    EXPECT_EQ(bch_bound({0, 1, 3, 4}, 8), 3u);
    EXPECT_EQ(hartmann_tzeng_bound({0, 1, 5, 6}, 24, 5), 4u);
    std::vector<std::uint64_t> T;
    for (std::uint64_t i = 1; i < 24; ++i)
        if (i != 19 && i != 23) T.push_back(i);
    EXPECT_EQ(bch_bound(T, 24), 19u);
    EXPECT_GE(hartmann_tzeng_bound(T, 24, 5), 19u);
    EXPECT_EQ(bch_bound({}, 7), 1u);
    EXPECT_EQ(bch_bound({6, 0, 1}, 7), 4u);
    EXPECT_THROW(hartmann_tzeng_bound({0}, 10, 5), Error);
}

TEST(BchHartmannTzeng, MatchesDirectSearch) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        const std::uint64_t n = 3 + rng() % 14;
        std::vector<std::uint64_t> T;
        for (std::uint64_t j = 0; j < n; ++j)
            if (rng() % 3 != 0) T.push_back(j);
        if (T.size() == n) continue;
        std::uint64_t q = 2;
        while (std::gcd(q, n) != 1) ++q;
        ASSERT_EQ(hartmann_tzeng_bound(T, n, q), ht_oracle(T, n)) << "n=" << n;
    }
}

TEST(BchHartmannTzeng, SoundOnSimpleRootCodes) {
    std::mt19937_64 rng(10);
    struct Case {
        std::uint64_t q;
        std::size_t n;
    };
    for (Case cs : {Case{2, 15}, {2, 21}, {3, 13}, {3, 8}, {4, 15}, {5, 24}, {7, 16}, {2, 17}}) {
        const Field f = field_of_order(cs.q);
        const RootContext ctx(f, cs.n);
        const auto cosets = cyclotomic_cosets(cs.n, cs.q);
        for (int it = 0; it < 12; ++it) {
            std::vector<std::uint64_t> T;
            for (const auto& c : cosets)
                if (rng() % 2) T.insert(T.end(), c.members.begin(), c.members.end());
            if (T.size() == cs.n) continue;
            const auto code = ConstacyclicCode::from_defining_set(ctx, T);
            std::sort(T.begin(), T.end());
            EXPECT_EQ(ctx.zeros_of(code.generator()), T);
            const std::size_t bch = bch_bound(T, cs.n), ht = hartmann_tzeng_bound(T, cs.n, cs.q);
            EXPECT_LE(bch, ht);
            // a lighter codeword than the bound would refute it, so the best seen is enough
            std::size_t upper = 0;
            try {
                upper = min_hamming_distance(code, DistanceStrategy::bounded(), {2'000'000, 1}).value;
            } catch (const BudgetExceeded& e) {
                upper = e.upper_bound;
            }
            EXPECT_LE(ht, upper) << code.describe();
        }
    }
}
