#include <gtest/gtest.h>

#include <random>

#include "spair/poly.hpp"

using namespace spair;

namespace {

Poly P(const Field& f, std::vector<std::int64_t> c) { return Poly::from_integers(f, c); }

Poly x_minus(const Field& f, std::int64_t a) { return P(f, {-a, 1}); }

}  // namespace

TEST(Degree, NegInfSentinel) {
    Field f = prime_field(5);
    Poly zero(f);
    EXPECT_TRUE(zero.degree().is_neg_inf());
    EXPECT_NE(zero.degree(), Degree(0));
    Poly g = P(f, {1, 2, 3});
    EXPECT_EQ((zero * g).degree(), zero.degree() + g.degree());
    EXPECT_EQ((g * g).degree(), Degree(4));
}

TEST(PolyArithmetic, Examples) {
    Field f5 = prime_field(5);
    auto [q, r] = divrem(P(f5, {-1, 0, 0, 1}), x_minus(f5, 1));
    EXPECT_EQ(q, P(f5, {1, 1, 1}));
    EXPECT_TRUE(r.is_zero());

    Field f7 = prime_field(7);
    EXPECT_EQ(gcd(P(f7, {-1, 0, 1}), x_minus(f7, 1)), x_minus(f7, 1));

    Poly g = pow(x_minus(f7, 1), 3) * P(f7, {1, 1, 1});
    EXPECT_EQ(g.eval(1), 0u);
    EXPECT_THROW(divrem(g, Poly(f7)), Error);
    EXPECT_THROW(g + P(f5, {1}), Error);
}

TEST(PolyArithmetic, DivremRoundTrip) {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {2, 3, 7, 9}) {
        Field f = field_of_order(q);
        std::uniform_int_distribution<Symbol> d(0, q - 1);
        for (int it = 0; it < 200; ++it) {
            std::vector<Symbol> a(rng() % 15), b(1 + rng() % 8);
            for (auto& v : a) v = d(rng);
            for (auto& v : b) v = d(rng);
            Poly A(f, a), B(f, b);
            if (B.is_zero()) continue;
            auto [Q, R] = divrem(A, B);
            EXPECT_EQ(B * Q + R, A);
            EXPECT_LT(R.degree(), B.degree());
        }
    }
}

TEST(FormalDerivative, Examples) {
    Field f5 = prime_field(5);
    EXPECT_EQ(formal_derivative(P(f5, {-1, 0, 0, 1})), P(f5, {0, 0, 3}));
    for (std::uint64_t p : {2, 3, 5, 7}) {
        Field f = prime_field(p);
        EXPECT_TRUE(formal_derivative(Poly::monomial(f, p)).is_zero());
    }
    // second derivative of x^3 over GF(7): 3*2*x
    Field f7 = prime_field(7);
    EXPECT_EQ(formal_derivative(formal_derivative(Poly::monomial(f7, 3))), P(f7, {0, 6}));
}

TEST(FormalDerivative, RepeatedFactorDividesDerivativeGcd) {
    Field f7 = prime_field(7);
    Poly g = pow(x_minus(f7, 1), 4) * pow(x_minus(f7, 2), 2) * x_minus(f7, 4);
    Poly d = gcd(g, formal_derivative(g));
    EXPECT_TRUE(divides(x_minus(f7, 1), d));
    EXPECT_TRUE(divides(x_minus(f7, 2), d));
    EXPECT_FALSE(divides(x_minus(f7, 4), d));
    Poly sqfree = x_minus(f7, 1) * x_minus(f7, 3) * P(f7, {1, 0, 1});
    EXPECT_TRUE(gcd(sqfree, formal_derivative(sqfree)).is_one());
}

TEST(CyclotomicCosets, Examples) {
    auto c = cyclotomic_cosets(8, 3);
    std::vector<std::vector<std::uint64_t>> expect{{0}, {1, 3}, {2, 6}, {4}, {5, 7}};
    ASSERT_EQ(c.size(), expect.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(c[i].members, expect[i]);
        EXPECT_EQ(c[i].representative, expect[i][0]);
    }
    auto c24 = cyclotomic_cosets(24, 5);
    EXPECT_EQ(c24[0].members, (std::vector<std::uint64_t>{0}));
    bool found = false;
    for (auto& cc : c24)
        if (cc.representative == 19) {
            EXPECT_EQ(cc.members, (std::vector<std::uint64_t>{19, 23}));
            found = true;
        }
    EXPECT_TRUE(found);
    for (auto& cc : cyclotomic_cosets(6, 7)) EXPECT_EQ(cc.size(), 1u);
    try {
        cyclotomic_cosets(10, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotCoprime);
    }
}

TEST(CyclotomicCosets, PartitionAndClosure) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::uint64_t n = 1; n <= 40; ++n) {
            if (std::gcd(n, q) != 1) continue;
            std::vector<int> hits(n, 0);
            for (auto& c : cyclotomic_cosets(n, q)) {
                EXPECT_EQ(c.representative, c.members.front());
                for (auto j : c.members) {
                    ++hits[j];
                    EXPECT_TRUE(c.contains(j * q % n));
                }
            }
            for (auto h : hits) EXPECT_EQ(h, 1);
        }
    }
}

TEST(MinimalPolynomial, Examples) {
    Field f7 = prime_field(7);
    RootContext ctx7(f7, 3);
    EXPECT_EQ(ctx7.beta(), 2u);
    EXPECT_EQ(ctx7.minimal_polynomial(cyclotomic_coset(1, 3, 7)), x_minus(f7, 2));
    Field f5 = prime_field(5);
    EXPECT_EQ(minimal_polynomial(cyclotomic_coset(1, 3, 5), f5), P(f5, {1, 1, 1}));
    EXPECT_EQ(minimal_polynomial(cyclotomic_coset(0, 3, 5), f5), x_minus(f5, 1));
    EXPECT_THROW(RootContext(f5, 10), Error);
}

TEST(MinimalPolynomial, ProductIsXnMinusOne) {
    for (std::uint64_t q : {2, 3, 5, 7, 9}) {
        Field f = field_of_order(q);
        for (std::uint64_t n = 1; n <= 30; ++n) {
            if (std::gcd(n, q) != 1) continue;
            RootContext ctx(f, n);
            Poly prod = Poly::one(f);
            for (auto& c : cyclotomic_cosets(n, q)) {
                Poly m = ctx.minimal_polynomial(c);
                EXPECT_TRUE(m.is_monic());
                EXPECT_EQ(m.size_degree(), c.size());
                prod *= m;
            }
            EXPECT_EQ(prod, Poly::binomial(f, n, 1)) << "q=" << q << " n=" << n;
        }
    }
}

TEST(Factor, Examples) {
    Field f5 = prime_field(5);
    auto fz = factor(Poly::binomial(f5, 15, 1));
    ASSERT_EQ(fz.factors.size(), 2u);
    EXPECT_EQ(fz.factors[0].first, x_minus(f5, 1));
    EXPECT_EQ(fz.factors[0].second, 5u);
    EXPECT_EQ(fz.factors[1].first, P(f5, {1, 1, 1}));
    EXPECT_EQ(fz.factors[1].second, 5u);

    auto g = factor(pow(x_minus(f5, 1), 3) * P(f5, {1, 1, 1}));
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.factors[0], std::make_pair(x_minus(f5, 1), 3u));
    EXPECT_EQ(g.factors[1], std::make_pair(P(f5, {1, 1, 1}), 1u));

    Field f7 = prime_field(7);
    auto h = factor(P(f7, {-1, 0, 1}));
    ASSERT_EQ(h.factors.size(), 2u);
    // canonical order compares coefficient vectors: x + 1 = [1, 1] < x - 1 = [6, 1]
    EXPECT_EQ(h.factors[0].first, x_minus(f7, -1));
    EXPECT_EQ(h.factors[1].first, x_minus(f7, 1));

    try {
        factor(Poly(f7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
    }
}

TEST(Factor, ReconstructsRandomPolynomials) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t q : {2, 3, 5, 9}) {
        Field f = field_of_order(q);
        std::uniform_int_distribution<Symbol> d(0, q - 1);
        for (int it = 0; it < 250; ++it) {
            std::vector<Symbol> c(1 + rng() % 13);
            for (auto& v : c) v = d(rng);
            Poly a(f, c);
            if (a.is_zero()) continue;
            auto fz = factor(a, rng());
            EXPECT_EQ(fz.product(f), a);
            for (std::size_t i = 0; i < fz.factors.size(); ++i) {
                const auto& [p, e] = fz.factors[i];
                EXPECT_TRUE(p.is_monic());
                EXPECT_GE(e, 1u);
                if (f.is_prime_field()) {
                    std::vector<std::uint64_t> raw(p.coeffs().begin(), p.coeffs().end());
                    EXPECT_TRUE(detail::raw_is_irreducible(raw, q));
                }
                for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(fz.factors[j].first == p);
            }
        }
    }
}

TEST(Factor, DeterministicPerSeed) {
    Field f9 = field_of_order(9);
    Poly a = Poly::binomial(f9, 20, 1);
    auto a1 = factor(a, 1), a2 = factor(a, 1), a3 = factor(a, 99);
    EXPECT_EQ(a1.factors, a2.factors);
    EXPECT_EQ(a1.factors, a3.factors);  // sorted output is seed independent
}

TEST(Multiplicity, Examples) {
    Field f7 = prime_field(7);
    Poly g = pow(x_minus(f7, 1), 4) * pow(x_minus(f7, 2), 2) * x_minus(f7, 4);
    EXPECT_EQ(multiplicity(g, x_minus(f7, 1)), 4u);
    EXPECT_EQ(multiplicity(g, x_minus(f7, 4)), 1u);
    EXPECT_EQ(multiplicity(g, x_minus(f7, 3)), 0u);
}
