#include "oracles.hpp"

#include <cullen/cullen_number.hpp>
#include <cullen/factorization.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace cullen;

namespace {

BigInt product_of(const Factorization& f)
{
    BigInt r = f.cofactor;
    for (const auto& pp : f.factors)
        for (unsigned i = 0; i < pp.multiplicity; ++i)
            r *= pp.prime;
    return r;
}

} // namespace

TEST(GeneralFactor, Examples)
{
    const auto f = general_factor(BigInt(385));
    EXPECT_TRUE(f.complete());
    EXPECT_EQ(f.summary(), "5 7 11");
    EXPECT_TRUE(f.squarefree());

    const auto g = general_factor(BigInt(9));
    EXPECT_EQ(g.summary(), "3^2");
    EXPECT_FALSE(g.squarefree());

    const auto p = general_factor(BigInt(97));
    EXPECT_EQ(p.summary(), "97");
    EXPECT_EQ(p.factors.size(), 1u);

    EXPECT_THROW(general_factor(BigInt(1)), std::invalid_argument);
}

TEST(GeneralFactor, MatchesSmallestPrimeFactorSieve)
{
    const std::uint32_t limit = 100000;
    const auto spf = oracle::smallest_prime_factors(limit);
    for (std::uint32_t x = 2; x <= limit; ++x) {
        std::vector<PrimePower> expect;
        for (std::uint32_t y = x; y > 1; y /= spf[y]) {
            if (!expect.empty() && expect.back().prime == spf[y])
                ++expect.back().multiplicity;
            else
                expect.push_back({BigInt(spf[y]), 1, false});
        }
        const auto f = general_factor(BigInt(x));
        ASSERT_TRUE(f.complete()) << x;
        ASSERT_EQ(f.factors, expect) << x;
    }
}

TEST(GeneralFactor, SemiprimeNeedsRho)
{
    // 1000003 * 1000033: both beyond the trial bound.
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    const auto f = general_factor(n);
    ASSERT_TRUE(f.complete());
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].prime, 1000003);
    EXPECT_EQ(f.factors[1].prime, 1000033);
}

TEST(GeneralFactor, PerfectPower)
{
    const BigInt p = BigInt(1000003);
    const auto f = general_factor(p * p * p);
    ASSERT_TRUE(f.complete());
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].multiplicity, 3u);
}

TEST(GeneralFactor, CullenNumbersRoundTrip)
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        const auto c = cullen::cullen(n);
        const auto f = general_factor(c.value);
        ASSERT_TRUE(f.consistent()) << n;
        ASSERT_EQ(product_of(f), c.value) << n;
        EXPECT_TRUE(f.complete()) << n;
    }
}

TEST(GeneralFactor, ZeroBudgetLeavesPartial)
{
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    const auto f = general_factor(n, FactorBudget{0, 1000});
    EXPECT_FALSE(f.complete());
    EXPECT_EQ(f.cofactor, n);
    EXPECT_TRUE(f.consistent());
    EXPECT_THROW(euler_phi(f), std::invalid_argument);
}

TEST(GeneralFactor, Deterministic)
{
    const auto c = cullen::cullen(97).value;
    const auto a = general_factor(c, FactorBudget{20000, 65536});
    const auto b = general_factor(c, FactorBudget{20000, 65536});
    EXPECT_EQ(a, b);
}

TEST(KnownPrimes, DividesOutFirst)
{
    const auto f = factor_with_known_primes(BigInt(385), {{BigInt(5), 1, false}});
    EXPECT_TRUE(f.complete());
    EXPECT_EQ(f.summary(), "5 7 11");
}

TEST(BrentRho, FindsFactor)
{
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    std::uint64_t iters = 100000;
    const BigInt d = brent_rho(n, 1, iters);
    ASSERT_NE(d, 0);
    EXPECT_EQ(n % d, 0);
    EXPECT_LT(iters, 100000u);
}

TEST(EulerPhi, Examples)
{
    EXPECT_EQ(euler_phi(general_factor(BigInt(9))), 6);
    EXPECT_EQ(euler_phi(general_factor(BigInt(385))), 240);
    EXPECT_EQ(euler_phi(general_factor(BigInt(97))), 96);
}

TEST(EulerPhi, MatchesCounting)
{
    for (std::uint64_t x = 2; x <= 3000; ++x)
        ASSERT_EQ(euler_phi(general_factor(BigInt(static_cast<unsigned long>(x)))),
                  BigInt(static_cast<unsigned long>(oracle::phi_by_counting(x))))
            << x;
}

TEST(FactorStatus, Names)
{
    EXPECT_EQ(to_string(FactorStatus::complete), "complete");
    EXPECT_EQ(to_string(FactorStatus::partial), "partial");
}
