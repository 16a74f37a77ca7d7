#include <cullen/interval.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using cullen::BigInt;
using cullen::Interval;
using cullen::Rational;

TEST(Interval, ExactIntegers)
{
    const Interval a(7);
    EXPECT_EQ(a.lower(), 7.0);
    EXPECT_EQ(a.upper(), 7.0);
    EXPECT_EQ(a.width(), 0.0);
    EXPECT_EQ(a.floor(), 7);
    EXPECT_EQ(a.ceil(), 7);
}

TEST(Interval, DecimalEnclosure)
{
    const auto x = Interval::from_decimal("0.1");
    EXPECT_LE(x.lower(), 0.1);
    EXPECT_GE(x.upper(), 0.1);
    EXPECT_TRUE(x.contains(Interval::from_decimal("0.1")));
    EXPECT_GT(x.width(), 0.0);
}

TEST(Interval, Arithmetic)
{
    const Interval a(3), b(4);
    EXPECT_EQ((a + b).mid(), 7.0);
    EXPECT_EQ((a - b).mid(), -1.0);
    EXPECT_EQ((a * b).mid(), 12.0);
    const auto third = Interval(1) / Interval(3);
    EXPECT_LE(third.lower(), 1.0 / 3);
    EXPECT_GE(third.upper(), 1.0 / 3);
    EXPECT_THROW(Interval(1) / (Interval(1) - Interval(1)), std::domain_error);
}

TEST(Interval, RationalAndBig)
{
    const Interval q(Rational(1, 3));
    EXPECT_TRUE(q.certainly_less(Interval(1)));
    const Interval big(BigInt("100000000000000000000000000000"));
    EXPECT_TRUE(big.certainly_greater(Interval(1L << 62)));
}

TEST(Interval, Functions)
{
    const auto l = log(Interval(2));
    EXPECT_LE(l.lower(), std::log(2.0));
    EXPECT_GE(l.upper(), std::log(2.0));
    EXPECT_LT(l.width(), 1e-70);
    const auto s = sqrt(Interval(2));
    EXPECT_LE(s.lower(), std::sqrt(2.0));
    EXPECT_GE(s.upper(), std::sqrt(2.0));
    EXPECT_TRUE((s * s).contains(Interval(2)));
    EXPECT_THROW(log(Interval(0)), std::domain_error);
    EXPECT_THROW(sqrt(Interval(-1)), std::domain_error);
}

TEST(Interval, Comparisons)
{
    const auto c = Interval(1) / log(Interval(2)) + Interval(1) / log(Interval(3));
    EXPECT_NEAR(c.mid(), 2.352934, 1e-6);
    EXPECT_TRUE(c.certainly_less(Interval::from_decimal("2.4")));
    EXPECT_FALSE(c.certainly_greater(Interval::from_decimal("2.4")));
    EXPECT_TRUE(Interval(3).certainly_at_least(Interval(3)));
}

TEST(Interval, FloorAmbiguity)
{
    const auto x = Interval::from_decimal("12.1104");
    EXPECT_EQ(x.floor(), 12);
    EXPECT_EQ(x.ceil(), 13);
    EXPECT_EQ(Interval::from_decimal("0.1").floor(), 0);
    // An interval straddling an integer has no single floor.
    const auto straddle = Interval(1) / Interval(3) * Interval(3);
    if (straddle.width() > 0) {
        EXPECT_FALSE(straddle.floor());
    }
}

TEST(Interval, Str)
{
    EXPECT_EQ(Interval(12).str(4), "12");
    EXPECT_EQ(Interval::from_decimal("9.94849").str(6), "9.94849");
}
