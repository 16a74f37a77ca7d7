#include <cullen/errors.hpp>
#include <cullen/factorization.hpp>
#include <cullen/lehmer_search.hpp>

#include <gtest/gtest.h>

#include <gmp.h>

#include <set>

using namespace cullen;

TEST(LehmerSearch, PrimeIndices)
{
    for (std::uint64_t n : {1u, 141u}) {
        const auto r = lehmer_constrained_factor(n);
        EXPECT_EQ(r.verdict, LehmerVerdict::prime) << n;
        EXPECT_TRUE(r.primality.is_prime());
        EXPECT_TRUE(r.candidates.empty());
    }
}

TEST(LehmerSearch, SquarefreeRefuted)
{
    // C_2 = 9 = 3^2
    const auto r = lehmer_constrained_factor(2);
    EXPECT_EQ(r.verdict, LehmerVerdict::squarefree_refuted);
    ASSERT_TRUE(r.witness.repeated_prime);
    EXPECT_EQ(*r.witness.repeated_prime, 3);
}

TEST(LehmerSearch, StructurallyRefutedSix)
{
    const auto r = lehmer_constrained_factor(6);
    EXPECT_EQ(r.verdict, LehmerVerdict::structurally_refuted);
    std::vector<BigInt> cands, divs;
    for (const auto& p : r.candidates)
        cands.push_back(p.value);
    for (const auto& p : r.structured_divisors)
        divs.push_back(p.value);
    EXPECT_EQ(cands, (std::vector<BigInt>{3, 5, 7, 13, 17, 97, 193}));
    EXPECT_EQ(divs, (std::vector<BigInt>{5, 7}));
    EXPECT_EQ(r.witness.cofactor, 11);
    EXPECT_NE(r.witness.explanation.find("5 does not divide 6"), std::string::npos);
    EXPECT_EQ(r.structured_part().summary(), "5 7");
}

TEST(LehmerSearch, StructuredDivisorsMatchOracle)
{
    for (std::uint64_t n = 2; n <= 200; ++n) {
        if (n == 141)
            continue;
        const auto r = lehmer_constrained_factor(n);
        const auto& c = r.cullen;
        std::set<BigInt> expect;
        for (std::uint64_t m = 1; m <= c.n1; m += 2) {
            if (c.n1 % m)
                continue;
            for (std::uint64_t e = 1; e <= c.n2; ++e) {
                BigInt v = BigInt(static_cast<unsigned long>(m));
                mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
                v += 1;
                if (mpz_divisible_p(c.value.get_mpz_t(), v.get_mpz_t()) &&
                    mpz_probab_prime_p(v.get_mpz_t(), 40) > 0)
                    expect.insert(v);
            }
        }
        std::set<BigInt> got;
        BigInt explained = 1;
        for (std::size_t i = 0; i < r.structured_divisors.size(); ++i) {
            got.insert(r.structured_divisors[i].value);
            for (unsigned k = 0; k < r.multiplicities[i]; ++k)
                explained *= r.structured_divisors[i].value;
        }
        ASSERT_EQ(got, expect) << n;
        ASSERT_NE(r.verdict, LehmerVerdict::prime) << n;
        if (r.verdict == LehmerVerdict::structurally_refuted) {
            EXPECT_EQ(r.witness.cofactor * explained, c.value) << n;
            EXPECT_GT(r.witness.cofactor, 1) << n;
        }
        if (r.verdict == LehmerVerdict::totient_refuted) {
            EXPECT_EQ(explained, c.value) << n;
            ASSERT_TRUE(r.witness.phi);
            EXPECT_NE((c.value - 1) % *r.witness.phi, 0) << n;
        }
        if (r.verdict == LehmerVerdict::squarefree_refuted) {
            ASSERT_TRUE(r.witness.repeated_prime);
            const BigInt& p = *r.witness.repeated_prime;
            EXPECT_EQ(c.value % (p * p), 0) << n;
        }
    }
}

TEST(LehmerSearch, RejectsZero)
{
    EXPECT_THROW(lehmer_constrained_factor(0), std::invalid_argument);
}

TEST(LehmerVerdictNames, ToString)
{
    EXPECT_EQ(to_string(LehmerVerdict::structurally_refuted), "structurally_refuted");
    EXPECT_EQ(to_string(LehmerVerdict::totient_refuted), "totient_refuted");
}

TEST(NpBound, Examples)
{
    const auto a = np_bound_check(6, BigInt(5));
    EXPECT_TRUE(a);
    EXPECT_EQ(a.np, 2u);
    EXPECT_EQ(a.lambda, 77);

    const auto b = np_bound_check(6, BigInt(11));
    EXPECT_TRUE(b);
    EXPECT_EQ(b.np, 1u);

    EXPECT_THROW(np_bound_check(6, BigInt(13)), std::invalid_argument);
    EXPECT_THROW(np_bound_check(6, BigInt(385)), std::invalid_argument);
    EXPECT_THROW(np_bound_check(6, BigInt(1)), std::invalid_argument);
}

TEST(NpBound, HoldsForEveryProperFactor)
{
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const auto c = cullen::cullen(static_cast<std::int64_t>(n));
        const auto f = general_factor(c.value);
        ASSERT_TRUE(f.complete());
        for (const auto& pp : f.factors) {
            if (pp.prime == c.value)
                continue;
            const auto chk = np_bound_check(n, pp.prime);
            EXPECT_TRUE(chk) << n << " " << pp.prime;
            EXPECT_LE(chk.np, n);
        }
    }
}
