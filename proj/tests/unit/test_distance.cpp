#include <gtest/gtest.h>

#include <random>

#include "spair/distance.hpp"

using namespace spair;

namespace {

struct Brute {
    std::size_t d_hamming = kNoDistance;
    std::size_t d_pair = kNoDistance;
    std::uint64_t nonzero = 0;
};

// every message m, encoded as m(x) g(x)
Brute brute_force(const ConstacyclicCode& c) {
    const std::uint64_t q = c.field().order();
    const std::size_t k = c.dimension();
    Brute b;
    std::vector<Symbol> m(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && m[i] == q - 1) m[i++] = 0;
        if (i == k) break;
        ++m[i];
        const Word w = c.encode(m);
        ++b.nonzero;
        b.d_hamming = std::min(b.d_hamming, w.hamming_weight());
        b.d_pair = std::min(b.d_pair, pair_weight(w));
    }
    return b;
}

std::vector<ConstacyclicCode> random_codes(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    struct Shape {
        std::uint64_t q;
        std::size_t n;
        Symbol lambda;
    };
    const Shape shapes[] = {{2, 7, 1}, {2, 9, 1}, {2, 12, 1}, {3, 8, 1}, {3, 6, 1}, {3, 10, 2}, {4, 5, 1},
                            {4, 6, 2}, {5, 6, 1}, {5, 10, 1}, {5, 8, 2}, {7, 6, 3}, {7, 7, 1}, {8, 7, 1}};
    std::vector<ConstacyclicCode> out;
    while (out.size() < count) {
        const Shape s = shapes[rng() % std::size(shapes)];
        const Field f = field_of_order(s.q);
        const auto fac = factor(Poly::binomial(f, s.n, s.lambda));
        Poly g = Poly::one(f);
        for (const auto& [p, e] : fac.factors) g *= pow(p, static_cast<unsigned>(rng() % (e + 1)));
        const auto c = ConstacyclicCode::from_generator(f, s.n, s.lambda, g);
        if (c.dimension() == 0 || std::pow(double(s.q), double(c.dimension())) > 2e5) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST(Strategy, Parse) {
    EXPECT_EQ(DistanceStrategy::parse("auto").kind, DistanceStrategy::Kind::Auto);
    EXPECT_EQ(DistanceStrategy::parse("exhaustive").kind, DistanceStrategy::Kind::Exhaustive);
    EXPECT_EQ(DistanceStrategy::parse("bounded").kind, DistanceStrategy::Kind::Bounded);
    EXPECT_EQ(DistanceStrategy::parse("castagnoli").kind, DistanceStrategy::Kind::Castagnoli);
    EXPECT_THROW(DistanceStrategy::parse("fast"), Error);
}

TEST(Enumeration, AgreesWithBruteForce) {
    for (const auto& c : random_codes(17, 150)) {
        const Brute b = brute_force(c);
        const auto hx = min_hamming_distance(c, DistanceStrategy::exhaustive());
        const auto hb = min_hamming_distance(c, DistanceStrategy::bounded());
        const auto px = min_pair_distance(c, DistanceStrategy::exhaustive());
        const auto pb = min_pair_distance(c, DistanceStrategy::bounded());
        ASSERT_EQ(hx.value, b.d_hamming) << c.describe();
        ASSERT_EQ(hb.value, b.d_hamming) << c.describe();
        ASSERT_EQ(px.value, b.d_pair) << c.describe();
        ASSERT_EQ(pb.value, b.d_pair) << c.describe();
        EXPECT_EQ(hx.enumerations, b.nonzero);
        EXPECT_LE(hb.enumerations, hx.enumerations);
        for (const auto* r : {&hx, &hb, &px, &pb}) {
            EXPECT_TRUE(r->exact());
            ASSERT_TRUE(r->witness.has_value());
            EXPECT_TRUE(c.is_member(*r->witness));
        }
        EXPECT_EQ(hx.witness->hamming_weight(), b.d_hamming);
        EXPECT_EQ(pair_weight(*pb.witness), b.d_pair);
        if (castagnoli_applicable(c)) {
            EXPECT_EQ(min_hamming_distance(c, DistanceStrategy::castagnoli()).value, b.d_hamming) << c.describe();
        }
    }
}

TEST(Enumeration, ShiftNormalizationCutsWork) {
    const Field f = prime_field(5);
    const auto c = ConstacyclicCode::from_generator(f, 15, 1, Poly::from_integers(f, {-1, 1}) * Poly::binomial(f, 3, 1));
    const InformationSetEnumerator full(c, false), norm(c);
    EXPECT_FALSE(full.shift_normalized());
    EXPECT_TRUE(norm.shift_normalized());
    EXPECT_EQ(full.layer_size(2), 55u * 16u);
    EXPECT_EQ(norm.layer_size(2), 10u * 4u);
    EXPECT_EQ(hamming_deepening(full).value, hamming_deepening(norm).value);
    EXPECT_EQ(pair_deepening(full).value, pair_deepening(norm).value);
}

TEST(Enumeration, GeneralMatrix) {
    // [6,3] code over GF(3) with a dependent row
    const Field f = prime_field(3);
    Matrix G(4, 6);
    const std::vector<Symbol> rows[] = {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 1}, {1, 1, 0, 1, 2, 1}, {0, 0, 1, 1, 0, 1}};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t j = 0; j < 6; ++j) G.at(r, j) = rows[r][j];
    const InformationSetEnumerator e(f, G);
    EXPECT_EQ(e.dimension(), 3u);
    EXPECT_FALSE(e.shift_normalized());
    const auto d = hamming_exhaustive(e);
    EXPECT_EQ(d.enumerations, 26u);
    EXPECT_EQ(d.value, 3u);
    EXPECT_EQ(hamming_deepening(e).value, 3u);
}

TEST(Enumeration, BoundedWeightLowerBound) {
    const Field f = prime_field(2);
    // [7,4,3] Hamming code
    const auto c = ConstacyclicCode::from_generator(f, 7, 1, Poly::from_integers(f, {1, 1, 0, 1}));
    const auto r1 = min_hamming_distance(c, DistanceStrategy::bounded_weight(1));
    EXPECT_TRUE(r1.lower_bound_only);
    EXPECT_FALSE(r1.exact());
    EXPECT_EQ(r1.value, 2u);
    const auto r3 = min_hamming_distance(c, DistanceStrategy::bounded_weight(3));
    EXPECT_TRUE(r3.exact());
    EXPECT_EQ(r3.value, 3u);
}

TEST(Enumeration, Sandwich) {
    for (const auto& c : random_codes(23, 100)) {
        const std::size_t dh = min_hamming_distance(c).value, dp = min_pair_distance(c).value;
        if (dh == 0 || dh >= c.length()) continue;
        EXPECT_LE(dh + 1, dp) << c.describe();
        EXPECT_LE(dp, 2 * dh) << c.describe();
        EXPECT_LE(c.dimension() + dp, c.length() + 2) << c.describe();
    }
}

TEST(Enumeration, ThreadCountDoesNotChangeResults) {
    const Field f = prime_field(7);
    const Poly g = pow(Poly::from_integers(f, {-1, 1}), 3) * Poly::from_integers(f, {1, 1, 1});
    const auto c = ConstacyclicCode::from_generator(f, 21, 1, g);
    const auto h1 = min_hamming_distance(c, DistanceStrategy::bounded(), {kDefaultBudget, 1});
    const auto p1 = min_pair_distance(c, DistanceStrategy::bounded(), {kDefaultBudget, 1});
    for (unsigned t : {2u, 3u, 5u, 8u}) {
        const auto h = min_hamming_distance(c, DistanceStrategy::bounded(), {kDefaultBudget, t});
        const auto p = min_pair_distance(c, DistanceStrategy::bounded(), {kDefaultBudget, t});
        EXPECT_EQ(h.value, h1.value);
        EXPECT_EQ(h.enumerations, h1.enumerations);
        EXPECT_EQ(h.witness, h1.witness);
        EXPECT_EQ(p.value, p1.value);
        EXPECT_EQ(p.enumerations, p1.enumerations);
        EXPECT_EQ(p.witness, p1.witness);
    }
    EXPECT_EQ(p1.value, 7u);
}

TEST(Enumeration, BudgetExceededCarriesBounds) {
    const Field f = prime_field(7);
    const Poly g = pow(Poly::from_integers(f, {-1, 1}), 3) * Poly::from_integers(f, {1, 1, 1});
    const auto c = ConstacyclicCode::from_generator(f, 21, 1, g);
    try {
        min_pair_distance(c, DistanceStrategy::bounded(), {1000, 1});
        ADD_FAILURE() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.code(), Errc::BudgetExceeded);
        EXPECT_LE(e.lower_bound, 7u);
        EXPECT_GE(e.upper_bound, 7u);
        EXPECT_LE(e.enumerations, 1000u);
    }
    EXPECT_THROW(min_hamming_distance(c, DistanceStrategy::exhaustive(), {1000, 1}), BudgetExceeded);
}

TEST(Enumeration, Errors) {
    const Field f = prime_field(5);
    const auto zero = ConstacyclicCode::from_generator(f, 4, 1, Poly::binomial(f, 4, 1));
    EXPECT_THROW(min_hamming_distance(zero), Error);
    const auto simple = ConstacyclicCode::from_generator(f, 4, 1, Poly::from_integers(f, {-1, 1}));
    try {
        min_hamming_distance(simple, DistanceStrategy::castagnoli());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::StrategyInapplicable);
    }
    EXPECT_THROW(min_pair_distance(simple, DistanceStrategy::castagnoli()), Error);
    const auto len1 = ConstacyclicCode::from_generator(f, 1, 1, Poly::one(f));
    EXPECT_THROW(min_pair_distance(len1), Error);
}

TEST(Enumeration, Len24Exhaustive) {
    const Field f = prime_field(5);
    std::vector<std::uint64_t> T;
    for (std::uint64_t i = 1; i < 24; ++i)
        if (i != 19 && i != 23) T.push_back(i);
    const auto c = ConstacyclicCode::from_defining_set(f, 24, T);
    const auto h = min_hamming_distance(c, DistanceStrategy::exhaustive());
    const auto p = min_pair_distance(c, DistanceStrategy::exhaustive());
    EXPECT_EQ(h.value, 19u);
    EXPECT_EQ(p.value, 23u);
    EXPECT_EQ(p.enumerations, 124u);
    const Brute b = brute_force(c);
    EXPECT_EQ(b.d_hamming, 19u);
    EXPECT_EQ(b.d_pair, 23u);
}
