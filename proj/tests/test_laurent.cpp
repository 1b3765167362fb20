#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace fockcb;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v_pow(k); }

LaurentPoly random_poly(std::mt19937& rng, int span = 4, int terms = 4) {
    std::uniform_int_distribution<int> exp(-span, span), coef(-5, 5);
    LaurentPoly p;
    for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(coef(rng), exp(rng));
    return p;
}

} // namespace

TEST(Laurent, QuantumIntegers) {
    EXPECT_EQ(qint(1), LaurentPoly(1));
    EXPECT_EQ(qint(2), v(1) + v(-1));
    EXPECT_EQ(qint(3), v(2) + LaurentPoly(1) + v(-2));
    EXPECT_THROW(qint(0), InvalidArgument);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(qint(n), oracle::quantum_integer(n)) << n;
}

TEST(Laurent, QuantumFactorialMatchesDenseProduct) {
    for (int n = 1; n <= 8; ++n) {
        oracle::Dense acc = oracle::Dense::from(LaurentPoly(1));
        for (int k = 1; k <= n; ++k) acc = oracle::mul(acc, oracle::Dense::from(oracle::quantum_integer(k)));
        EXPECT_EQ(qfactorial(n), acc.to_poly()) << n;
    }
}

TEST(Laurent, QuantumFactorialAtOneIsFactorialBeyondInt64) {
    BigInt fact = 1;
    for (int k = 2; k <= 25; ++k) fact *= k;
    EXPECT_EQ(qfactorial(25).eval_at_one(), fact);
    EXPECT_GT(fact, BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(Laurent, BarInvolution) {
    const LaurentPoly p = LaurentPoly::monomial(3, 2) - v(-1);
    EXPECT_EQ(p.bar(), LaurentPoly::monomial(3, -2) - v(1));
    EXPECT_EQ(p.bar().bar(), p);
    EXPECT_TRUE(qint(4).is_bar_invariant());
    EXPECT_FALSE(v(1).is_bar_invariant());
}

TEST(Laurent, ArithmeticAgreesWithDenseOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        EXPECT_EQ(a * b, oracle::mul(oracle::Dense::from(a), oracle::Dense::from(b)).to_poly());
        EXPECT_EQ(a.bar(), oracle::bar(oracle::Dense::from(a)).to_poly());
    }
}

TEST(Laurent, BarIsMultiplicativeAndAdditive) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
        EXPECT_EQ((a + b).bar(), a.bar() + b.bar());
    }
}

TEST(Laurent, ExactDivisionRoundTrip) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_poly(rng);
        auto b = random_poly(rng, 3, 3);
        if (b.is_zero()) b = v(2);
        EXPECT_EQ(exact_div(a * b, b), a);
    }
}

TEST(Laurent, ExactDivisionFailures) {
    EXPECT_THROW(exact_div(LaurentPoly(1), v(1) + LaurentPoly(1)), DivisionNotExact);
    EXPECT_THROW(exact_div(LaurentPoly(2), LaurentPoly(3)), DivisionNotExact);
    EXPECT_THROW(exact_div(v(1), LaurentPoly()), InvalidArgument);
    EXPECT_EQ(exact_div(v(3) - v(-3), v(1) - v(-1)), qint(3));
    EXPECT_EQ(exact_div(LaurentPoly(), qint(2)), LaurentPoly());
}

TEST(Laurent, BarSymmetricPart) {
    const LaurentPoly c = v(-2) + LaurentPoly::monomial(3, -1) + LaurentPoly(2) + LaurentPoly::monomial(5, 1);
    const LaurentPoly m = bar_symmetric_part(c);
    EXPECT_EQ(m, v(-2) + v(2) + LaurentPoly::monomial(3, -1) + LaurentPoly::monomial(3, 1) + LaurentPoly(2));
    EXPECT_TRUE(bar_symmetric_part(v(1) + v(4)).is_zero());

    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        const auto q = bar_symmetric_part(p);
        EXPECT_TRUE(q.is_bar_invariant());
        EXPECT_TRUE((p - q).in_vZv());
    }
}

TEST(Laurent, Predicates) {
    EXPECT_TRUE(LaurentPoly().in_vZv());
    EXPECT_TRUE((v(1) + v(3)).in_vZv());
    EXPECT_FALSE((LaurentPoly(1) + v(3)).in_vZv());
    EXPECT_TRUE(LaurentPoly(1).is_one());
    EXPECT_FALSE(v(1).is_one());
    EXPECT_TRUE((v(1) + LaurentPoly::monomial(2, 2)).has_nonnegative_coefficients());
    EXPECT_FALSE((v(1) - v(2)).has_nonnegative_coefficients());
    EXPECT_EQ((v(-1) + LaurentPoly::monomial(4, 3)).eval_at_one(), 5);
}

TEST(Laurent, TextForms) {
    EXPECT_EQ(to_string(LaurentPoly()), "0");
    EXPECT_EQ(to_string(v(-2) + LaurentPoly::monomial(3, 1)), "v^-2 + 3*v");
    EXPECT_EQ(to_string(LaurentPoly(1) - v(2)), "1 - v^2");
    EXPECT_EQ(to_cell(LaurentPoly()), ".");
    EXPECT_EQ(to_cell(v(1)), "v^1");
    EXPECT_EQ(to_cell(v(-1) + LaurentPoly::monomial(2, 3)), "v^-1+2*v^3");
    EXPECT_EQ(to_cell(-v(2)), "-v^2");
    EXPECT_EQ(to_cell(LaurentPoly(1)), "1");
}

TEST(Laurent, CellRoundTrip) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        EXPECT_EQ(parse_cell(to_cell(p)), p) << to_cell(p);
    }
    EXPECT_EQ(parse_cell("2*v^3+v^-1"), LaurentPoly::monomial(2, 3) + v(-1));
    EXPECT_THROW(parse_cell("v^"), ParseError);
    EXPECT_THROW(parse_cell("*v"), ParseError);
    EXPECT_THROW(parse_cell("3x"), ParseError);
}
