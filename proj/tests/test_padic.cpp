#include <gtest/gtest.h>

#include <random>

#include "supercong/padic.hpp"
#include "padic_matchers.hpp"

using namespace supercong;

namespace {

// v_p and the unit residue of an exact rational, computed without PAdic.
struct Reference {
    int v;
    BigInt unit;
};

Reference reference(const Rational& q, u64 p, int digits) {
    BigInt num = q.get_num(), den = q.get_den();
    const BigInt pp(static_cast<unsigned long>(p));
    int v = 0;
    while (num % pp == 0) num /= pp, ++v;
    while (den % pp == 0) den /= pp, --v;
    BigInt mod;
    mpz_pow_ui(mod.get_mpz_t(), pp.get_mpz_t(), digits);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    BigInt u = num * inv % mod;
    if (u < 0) u += mod;
    return {v, u};
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 3000);
    long n = num(rng);
    if (n == 0) n = 1;
    return make_rational(BigInt(n), BigInt(den(rng)));
}

}  // namespace

TEST(PadicFromRational, HalfAtSeven) {
    const PAdic x = from_rational(1, 2, 7, 4);
    EXPECT_EQ(x.valuation(), 0);
    EXPECT_EQ(x.unit(), 1201);
    EXPECT_EQ(x.digits(), 4);
}

TEST(PadicFromRational, NegativeValuation) {
    const PAdic x = from_rational(1, 7, 7, 4);
    EXPECT_EQ(x.valuation(), -1);
    EXPECT_EQ(x.unit(), 1);
}

TEST(PadicFromRational, HarmonicSix) {
    const PAdic x = from_rational(49, 20, 7, 4);
    EXPECT_EQ(x.valuation(), 2);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(20).get_mpz_t(), BigInt(2401).get_mpz_t());
    EXPECT_EQ(x.unit(), inv);
}

TEST(PadicFromRational, ZeroIsExact) {
    const PAdic x = from_rational(0, 5, 7, 4);
    EXPECT_TRUE(x.is_exact_zero());
    EXPECT_THROW(from_rational(1, 0, 7, 4), DivisionByZero);
}

TEST(PadicArith, Examples) {
    const Qp F(7, 4);
    EXPECT_TRUE(Same(add(F.rational(1, 2), F.rational(1, 2)), F.one()));
    EXPECT_TRUE(Same(mul(F.p_power(1), F.p_power(-1)), F.one()));
    const PAdic h = F.rational(49, 20);
    const PAdic d = sub(h, h);
    EXPECT_TRUE(d.is_exact_zero());
}

TEST(PadicArith, PartialCancellationLosesDigits) {
    const Qp F(7, 4);
    // 1/2 - 1/9 = 7/18: one digit cancels.
    const PAdic d = F.rational(1, 2) - F.rational(1, 9);
    EXPECT_EQ(d.valuation(), 1);
    EXPECT_EQ(d.digits(), 3);
    EXPECT_TRUE(congruent_mod(d, F.rational(7, 18), 4));
}

TEST(PadicArith, CancellationPastKnownDigitsThrows) {
    const Qp F(7, 2);
    // Equal to every digit known for both, with different digit counts: the
    // difference is O(7^2) at best, and nothing of it is known.
    const PAdic x = F.integer(1);
    const PAdic y = PAdic::from_integer(1 + 343, F.context(), 3);
    EXPECT_THROW(sub(x, y), PrecisionExhausted);
    // Same digit count: the operands are read as the same number.
    EXPECT_TRUE(sub(x, F.integer(1 + 343)).is_exact_zero());
}

TEST(PadicInvert, Examples) {
    const Qp F(7, 4);
    const PAdic i = invert(F.integer(2));
    EXPECT_EQ(i.valuation(), 0);
    EXPECT_EQ(i.unit(), 1201);
    const PAdic j = invert(F.p_power(2));
    EXPECT_EQ(j.valuation(), -2);
    EXPECT_EQ(j.unit(), 1);
    EXPECT_TRUE(Same(invert(F.rational(3, 5)), F.rational(5, 3)));
    EXPECT_THROW(invert(F.zero()), DivisionByZero);
}

TEST(PadicCongruent, Examples) {
    const Qp F(7, 4);
    EXPECT_TRUE(congruent_mod(F.rational(49, 20), F.zero(), 2));
    EXPECT_FALSE(congruent_mod(F.rational(49, 20), F.zero(), 3));
    const PAdic x = F.rational(3, 49);
    EXPECT_TRUE(congruent_mod(x, x, x.digits() + x.valuation()));
    EXPECT_TRUE(congruent_mod(F.integer(1), F.integer(8), 1));
    EXPECT_FALSE(congruent_mod(F.integer(1), F.integer(8), 2));
}

TEST(PadicCongruent, RefusesUnknownDigits) {
    const Qp F(7, 4);
    EXPECT_THROW(congruent_mod(F.integer(1), F.integer(2), 5), InsufficientPrecision);
    const PAdic approx = PAdic::approximate_zero(F.context(), 3);
    EXPECT_TRUE(congruent_mod(approx, F.p_power(3), 3));
    EXPECT_THROW(congruent_mod(approx, F.zero(), 4), InsufficientPrecision);
}

TEST(PadicRender, Format) {
    const Qp F(7, 4);
    EXPECT_EQ(F.rational(49, 20).render(4), "7^2 * " + BigInt(F.rational(49, 20).unit() % 49).get_str() + " mod 7^4");
    EXPECT_EQ(F.zero().render(3), "0 mod 7^3");
    EXPECT_EQ(F.integer(8).render(1), "7^0 * 1 mod 7^1");
}

TEST(PadicProperty, AgreesWithRationalOracle) {
    std::mt19937_64 rng(12345);
    for (u64 p : {7ULL, 11ULL, 13ULL, 1000003ULL}) {
        const int N = 6;
        const Qp F(p, N);
        for (int trial = 0; trial < 300; ++trial) {
            const Rational a = random_rational(rng), b = random_rational(rng);
            const PAdic x = F.rational(a), y = F.rational(b);
            const Reference ra = reference(a, p, N);
            EXPECT_EQ(x.valuation(), ra.v);
            EXPECT_EQ(x.unit(), ra.unit);
            const PAdic s = x + y, d = x - y, m = x * y, q = x / y;
            const int e = std::min(x.valuation(), y.valuation()) + 3;
            EXPECT_TRUE(congruent_mod(s, F.rational(a + b), e));
            EXPECT_TRUE(congruent_mod(d, F.rational(a - b), e));
            EXPECT_TRUE(congruent_mod(m, F.rational(a * b), x.valuation() + y.valuation() + N));
            EXPECT_TRUE(congruent_mod(q, F.rational(a / b), x.valuation() - y.valuation() + N));
        }
    }
}

TEST(PadicProperty, RingAxioms) {
    std::mt19937_64 rng(99);
    const Qp F(11, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const PAdic x = F.rational(random_rational(rng));
        const PAdic y = F.rational(random_rational(rng));
        const PAdic z = F.rational(random_rational(rng));
        const int e = std::min({x.valuation(), y.valuation(), z.valuation()}) * 2 + 4;
        EXPECT_TRUE(congruent_mod(x + y, y + x, e));
        EXPECT_TRUE(congruent_mod(x * y, y * x, e));
        EXPECT_TRUE(congruent_mod((x + y) + z, x + (y + z), e));
        EXPECT_TRUE(congruent_mod((x * y) * z, x * (y * z), x.valuation() + y.valuation() + z.valuation() + 6));
        EXPECT_TRUE(congruent_mod(x * (y + z), x * y + x * z, x.valuation() + e));
        EXPECT_TRUE(congruent_mod(x * invert(x), F.one(), 6));
    }
}

TEST(PadicProperty, RationalTimesDenominator) {
    std::mt19937_64 rng(7);
    const Qp F(13, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational q = random_rational(rng);
        const PAdic lhs = F.rational(q) * F.integer(BigInt(q.get_den()));
        const PAdic rhs = F.integer(BigInt(q.get_num()));
        EXPECT_TRUE(congruent_mod(lhs, rhs, std::min(lhs.absolute_precision(), rhs.absolute_precision())));
    }
}

TEST(PadicBackend, BignumMatchesWordPath) {
    std::mt19937_64 rng(2024);
    for (u64 p : {7ULL, 10007ULL}) {
        const Qp W(p, 8), B(p, 8, Backend::bignum);
        for (int trial = 0; trial < 200; ++trial) {
            const Rational a = random_rational(rng), b = random_rational(rng);
            const PAdic xw = W.rational(a), yw = W.rational(b);
            const PAdic xb = B.rational(a), yb = B.rational(b);
            EXPECT_EQ((xw + yw).str(), (xb + yb).str());
            EXPECT_EQ((xw - yw).str(), (xb - yb).str());
            EXPECT_EQ((xw * yw).str(), (xb * yb).str());
            EXPECT_EQ((xw / yw).str(), (xb / yb).str());
            EXPECT_EQ(xw.pow(5).str(), xb.pow(5).str());
        }
    }
}

TEST(PadicBackend, LargeDigitCountFallsBackToBignum) {
    const Qp F(10007, 40);
    const PAdic x = F.rational(1, 3);
    EXPECT_TRUE(Same(x * F.integer(3), F.one()));
    EXPECT_EQ(x.digits(), 40);
}

TEST(ResidueRing, PowerAndInverseAgree) {
    const Qp F(7, 4);
    const ResidueRing R(F.context(), 4);
    const auto two = R.from_integer(2);
    EXPECT_EQ(R.to_big(R.pow(two, 10)), 1024 % 2401);
    EXPECT_TRUE(R.is_zero(R.from_integer(2401)));
    EXPECT_EQ(R.to_big(R.from_integer(-1)), 2400);
}

TEST(ParseRational, Forms) {
    EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}
