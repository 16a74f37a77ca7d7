#include "oracles.hpp"

#include <cullen/cullen_number.hpp>
#include <cullen/predicates.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace cullen;

namespace {

Factorization factor_from_sieve(std::uint32_t x, const std::vector<std::uint32_t>& spf)
{
    Factorization f;
    f.value = x;
    for (std::uint32_t y = x; y > 1; y /= spf[y]) {
        if (!f.factors.empty() && f.factors.back().prime == spf[y])
            ++f.factors.back().multiplicity;
        else
            f.factors.push_back({BigInt(spf[y]), 1, false});
    }
    return f;
}

bool fermat_congruence_all_bases(std::uint64_t n)
{
    for (std::uint64_t a = 0; a < n; ++a)
        if (oracle::powmod(a, n, n) != a)
            return false;
    return true;
}

} // namespace

TEST(Predicates, Carmichael561)
{
    const auto f = general_factor(BigInt(561));
    EXPECT_TRUE(is_carmichael(BigInt(561), f));
    EXPECT_FALSE(is_lehmer(BigInt(561), f));
    EXPECT_TRUE(fermat_congruence_all_bases(561));
}

TEST(Predicates, Pseudoprime341)
{
    const auto f = general_factor(BigInt(341));
    EXPECT_TRUE(is_pseudoprime(BigInt(341), BigInt(2), f));
    EXPECT_FALSE(is_pseudoprime(BigInt(341), BigInt(3), f));
    EXPECT_FALSE(is_carmichael(BigInt(341), f));
    EXPECT_TRUE(is_pseudoprime(BigInt(341), BigInt(2), is_prime(BigInt(341))));
}

TEST(Predicates, PrimesAreNeither)
{
    const auto f = general_factor(BigInt(97));
    EXPECT_FALSE(is_lehmer(BigInt(97), f));
    EXPECT_FALSE(is_carmichael(BigInt(97), f));
    EXPECT_FALSE(is_pseudoprime(BigInt(97), BigInt(2), f));
}

TEST(Predicates, SquareIsNotCarmichael)
{
    const auto f = general_factor(BigInt(9));
    EXPECT_FALSE(is_carmichael(BigInt(9), f));
    EXPECT_FALSE(is_lehmer(BigInt(9), f));
}

TEST(Predicates, CullenSixIsNotCarmichael)
{
    const auto f = general_factor(BigInt(385));
    EXPECT_FALSE(is_carmichael(BigInt(385), f));
    EXPECT_FALSE(fermat_congruence_all_bases(385));
}

TEST(Predicates, MismatchedFactorizationRejected)
{
    const auto f = general_factor(BigInt(385));
    EXPECT_THROW(is_lehmer(BigInt(561), f), std::invalid_argument);
    EXPECT_THROW(is_carmichael(BigInt(561), f), std::invalid_argument);
}

TEST(Predicates, PartialFactorizationRejected)
{
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    const auto f = general_factor(n, FactorBudget{0, 100});
    ASSERT_FALSE(f.complete());
    EXPECT_THROW(is_lehmer(n, f), std::invalid_argument);
}

TEST(Predicates, UndecidedCompositenessRejected)
{
    PrimalityVerdict v;
    v.value = BigInt("170141183460469231731687303715884105727");
    v.status = Primality::probable_prime;
    EXPECT_THROW(is_pseudoprime(v.value, BigInt(2), v), std::invalid_argument);
}

TEST(Predicates, CarmichaelMatchesBruteForceBelow3000)
{
    const auto spf = oracle::smallest_prime_factors(3000);
    for (std::uint32_t x = 4; x <= 3000; ++x) {
        const bool composite = spf[x] != x;
        const bool expect = composite && fermat_congruence_all_bases(x);
        ASSERT_EQ(is_carmichael(BigInt(x), factor_from_sieve(x, spf)), expect) << x;
    }
}

TEST(Predicates, NoLehmerBelowOneMillion)
{
    const std::uint32_t limit = 1000000;
    const auto spf = oracle::smallest_prime_factors(limit);
    std::size_t carmichael = 0;
    for (std::uint32_t x = 4; x <= limit; ++x) {
        if (spf[x] == x)
            continue;
        const auto f = factor_from_sieve(x, spf);
        ASSERT_FALSE(is_lehmer(BigInt(x), f)) << x;
        if (x % 2 == 1 && f.squarefree() && is_carmichael(BigInt(x), f)) {
            ++carmichael;
            for (unsigned long a = 2; a <= 20; ++a)
                ASSERT_TRUE(is_pseudoprime(BigInt(x), BigInt(a), f)) << x << " " << a;
        }
    }
    EXPECT_EQ(carmichael, 43u);
}

TEST(Ratio, SmallIndices)
{
    const std::vector<std::string> expect = {"1", "3", "5"};
    for (std::uint64_t n = 1; n <= 3; ++n) {
        const auto c = cullen::cullen(static_cast<std::int64_t>(n));
        const auto r = lehmer_ratio(n, general_factor(c.value));
        EXPECT_EQ(to_string(r.ratio), expect[n - 1]) << n;
    }
}

TEST(Ratio, ExactAgainstIndependentPhi)
{
    for (std::int64_t n = 4; n <= 40; ++n) {
        const auto c = cullen::cullen(n);
        const auto f = general_factor(c.value);
        ASSERT_TRUE(f.complete());
        // phi = C * prod (1 - 1/p), accumulated as a rational.
        Rational phi = c.value;
        for (const auto& pp : f.factors)
            phi *= Rational(pp.prime - 1, pp.prime);
        phi.canonicalize();
        ASSERT_EQ(phi.get_den(), 1);
        const BigInt g = gcd(BigInt(c.value - 1), BigInt(phi.get_num()));
        Rational expect(phi.get_num(), g);
        expect.canonicalize();
        const auto r = lehmer_ratio(static_cast<std::uint64_t>(n), f);
        EXPECT_EQ(r.ratio, expect) << n;
        EXPECT_GT(r.ratio, 1) << n;
    }
}
