#include <cullen/cascade.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace cullen;

namespace {

const BoundCascade& cascade()
{
    static const BoundCascade c = cascade_verify();
    return c;
}

const CascadeStage& stage(const std::string& name)
{
    for (const auto& s : cascade().stages)
        if (s.name == name)
            return s;
    throw std::out_of_range("no stage " + name);
}

} // namespace

TEST(Cascade, AllStagesPass)
{
    const auto& c = cascade();
    for (const auto& s : c.stages)
        EXPECT_TRUE(s.passed) << s.name << ": " << s.note;
    EXPECT_TRUE(c.all_passed);
    EXPECT_EQ(c.verdict, "contradiction established");
    EXPECT_EQ(c.stages.size(), 12u);
}

TEST(Cascade, StageChain)
{
    EXPECT_EQ(stage("first crossing").n_bound_out, 600000u);
    EXPECT_EQ(stage("fermat plus divisor count").k_bound, 17u);
    EXPECT_EQ(stage("second crossing").n_bound_out, 122000u);
    EXPECT_EQ(stage("recount").k_bound, 15u);
    EXPECT_EQ(stage("third crossing").n_bound_out, 93000u);
    EXPECT_EQ(stage("three divides n").k_bound, 12u);
    EXPECT_EQ(stage("no prime above 3 divides n").k_bound, 13u);
    EXPECT_LT(*stage("three divides n").k_bound, lehmer_min_prime_factors);
    EXPECT_LT(*stage("no prime above 3 divides n").k_bound, lehmer_min_prime_factors);
}

TEST(Cascade, ConstantsMatchPublishedDecimals)
{
    std::map<std::string, double> seen;
    for (const auto& s : cascade().stages)
        for (const auto& k : s.constants) {
            EXPECT_TRUE(k.matches) << k.name;
            if (k.expected) {
                EXPECT_NEAR(k.value.mid(), *k.expected, constant_tolerance) << k.name;
                seen[k.name] = k.value.mid();
            }
        }
    ASSERT_TRUE(seen.count("ln(600000)/ln 3"));
    ASSERT_TRUE(seen.count("ln(122000)/ln 3"));
    ASSERT_TRUE(seen.count("1 + ln(18600)/ln 3"));
    EXPECT_NEAR(seen["ln(600000)/ln 3"], std::log(600000.0) / std::log(3.0), 1e-12);
    EXPECT_NEAR(seen["ln(122000)/ln 3"], std::log(122000.0) / std::log(3.0), 1e-12);
    EXPECT_NEAR(seen["1 + ln(18600)/ln 3"], 1 + std::log(18600.0) / std::log(3.0), 1e-12);
    EXPECT_NEAR(seen["ln(93000)/ln 5"], 7.1083, 5e-5);
    EXPECT_NEAR(seen["ln(100000)/ln 5"], 7.15338, 5e-5);
}

TEST(Cascade, Crossings)
{
    EXPECT_EQ(k_bounds_crossing(30, 600000), 498434u);
    EXPECT_EQ(k_lower_crossing(30, 122000, Interval(17)), 121836u);
    EXPECT_EQ(k_lower_crossing(30, 93000, Interval(15)), 92636u);
    EXPECT_FALSE(k_lower_crossing(30, 1000, Interval(17)));
}

TEST(Cascade, ProductAndExternalFacts)
{
    const auto& c = cascade();
    EXPECT_TRUE(c.product.below_two);
    EXPECT_EQ(c.product.primes.size(), 48u);
    ASSERT_FALSE(c.external.empty());
    EXPECT_EQ(c.external.front().value, "14");
}

TEST(Cascade, SmallCapStillReported)
{
    const auto c = cascade_verify(BigInt(100));
    EXPECT_EQ(c.product.cap, 100);
    EXPECT_FALSE(c.stages.empty());
}
