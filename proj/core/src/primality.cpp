#include "cullen/primality.hpp"

#include "cullen/cullen_number.hpp"

#include <algorithm>
#include <stdexcept>

namespace cullen {

std::string to_string(Primality p)
{
    switch (p) {
    case Primality::prime: return "prime";
    case Primality::composite: return "composite";
    case Primality::probable_prime: return "probable_prime";
    }
    return "?";
}

std::span<const unsigned> small_primes(std::size_t count)
{
    static const std::vector<unsigned> table = [] {
        constexpr unsigned limit = 1u << 16;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned> primes;
        for (unsigned i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            primes.push_back(i);
            for (unsigned long j = static_cast<unsigned long>(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return primes;
    }();
    if (count > table.size())
        throw std::out_of_range("small_primes: table holds " + std::to_string(table.size()) +
                                " primes");
    return {table.data(), count};
}

namespace {

std::span<const unsigned> sieve_primes()
{
    return small_primes(6542); // every prime below 2^16
}

constexpr unsigned trial_limit = 1000;

// One strong-pseudoprime round. n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const BigInt& n, const BigInt& nm1, const BigInt& d, unsigned s,
                           const BigInt& base)
{
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace

BigInt deterministic_mr_limit()
{
    static const BigInt limit("3317044064679887385961981");
    return limit;
}

PrimalityVerdict is_prime(const BigInt& n, unsigned rounds)
{
    PrimalityVerdict v{n, Primality::composite, {}};
    if (sgn(n) < 0)
        throw std::invalid_argument("is_prime: negative input");
    if (n < 2) {
        v.certificate = BelowTwo{};
        return v;
    }

    for (unsigned p : sieve_primes()) {
        if (p > trial_limit)
            break;
        if (n == p) {
            v.status = Primality::prime;
            v.certificate = DeterministicRegime{"small prime"};
            return v;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            v.certificate = FactorWitness{BigInt(p)};
            return v;
        }
    }
    if (n < static_cast<unsigned long>(trial_limit) * trial_limit) {
        v.status = Primality::prime;
        v.certificate = DeterministicRegime{"trial division"};
        return v;
    }

    const BigInt nm1 = n - 1;
    const unsigned s = two_adic_valuation(nm1);
    BigInt d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), nm1.get_mpz_t(), s);

    if (n < deterministic_mr_limit()) {
        for (unsigned p : small_primes(13)) {
            if (!strong_probable_prime(n, nm1, d, s, BigInt(p))) {
                v.certificate = MillerRabinWitness{BigInt(p)};
                return v;
            }
        }
        v.status = Primality::prime;
        v.certificate = DeterministicRegime{"strong pseudoprime tests to bases 2..41"};
        return v;
    }

    if (!strong_probable_prime(n, nm1, d, s, BigInt(2))) {
        v.certificate = MillerRabinWitness{BigInt(2)};
        return v;
    }
    // Fixed seed: verdicts must be reproducible run to run.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x43756c6cUL);
    const BigInt span = n - 3;
    for (unsigned r = 0; r < rounds; ++r) {
        BigInt a = rng.get_z_range(span) + 2;
        if (!strong_probable_prime(n, nm1, d, s, a)) {
            v.certificate = MillerRabinWitness{a};
            return v;
        }
    }
    v.status = Primality::probable_prime;
    v.certificate = ProbabilisticRegime{rounds};
    return v;
}

PrimalityVerdict proth_test(const BigInt& k, std::uint64_t e)
{
    if (k < 1 || mpz_even_p(k.get_mpz_t()) || e < 1)
        throw std::invalid_argument("proth_test: need odd k >= 1 and e >= 1");
    if (mpz_sizeinbase(k.get_mpz_t(), 2) > e)
        throw std::invalid_argument("proth_test: k must be below 2^e");

    BigInt n = k;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
    n += 1;
    const BigInt nm1 = n - 1;
    BigInt half;
    mpz_tdiv_q_2exp(half.get_mpz_t(), nm1.get_mpz_t(), 1);

    PrimalityVerdict v{n, Primality::composite, {}};
    BigInt r;
    for (unsigned a : small_primes(proth_base_cap)) {
        if (n == a) {
            v.status = Primality::prime;
            v.certificate = DeterministicRegime{"small prime"};
            return v;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), a)) {
            v.certificate = FactorWitness{BigInt(a)};
            return v;
        }
        mpz_powm(r.get_mpz_t(), BigInt(a).get_mpz_t(), half.get_mpz_t(), n.get_mpz_t());
        if (r == nm1) {
            v.status = Primality::prime;
            v.certificate = ProthWitness{a};
            return v;
        }
        if (r != 1) {
            // Euler's criterion forces +-1 for prime n.
            v.certificate = EulerWitness{a, r};
            return v;
        }
    }

    PrimalityVerdict fallback = is_prime(n);
    if (fallback.status == Primality::prime && !std::holds_alternative<DeterministicRegime>(fallback.certificate))
        fallback.status = Primality::probable_prime;
    return fallback;
}

BigInt fermat_number(unsigned gamma)
{
    BigInt f;
    mpz_setbit(f.get_mpz_t(), 1UL << gamma);
    return f + 1;
}

std::vector<FermatPrime> fermat_primes()
{
    std::vector<FermatPrime> out;
    for (unsigned g = 0; g <= 4; ++g)
        out.push_back({g, fermat_number(g)});
    return out;
}

bool divides_fermat_number(const BigInt& f, unsigned gamma)
{
    if (f < 2)
        return false;
    BigInt exp;
    mpz_setbit(exp.get_mpz_t(), gamma);
    BigInt r;
    mpz_powm(r.get_mpz_t(), BigInt(2).get_mpz_t(), exp.get_mpz_t(), f.get_mpz_t());
    return r == f - 1;
}

std::optional<BigInt> known_fermat_factor(unsigned gamma)
{
    switch (gamma) {
    case 5: return BigInt("641");
    case 6: return BigInt("274177");
    case 7: return BigInt("59649589127497217");
    case 8: return BigInt("1238926361552897");
    case 9: return BigInt("2424833");
    case 10: return BigInt("45592577");
    case 11: return BigInt("319489");
    case 12: return BigInt("114689");
    case 13: return BigInt("2710954639361");
    case 15: return BigInt("1214251009");
    case 16: return BigInt("825753601");
    case 17: return BigInt("31065037602817");
    case 18: return BigInt("13631489");
    case 19: return BigInt("70525124609");
    default: return std::nullopt;
    }
}

FermatStatus fermat_status(unsigned gamma)
{
    if (gamma > 18)
        throw std::invalid_argument("fermat_status: gamma must be in 0..18");

    FermatStatus st;
    st.gamma = gamma;
    if (gamma <= 4) {
        st.prime = is_prime(fermat_number(gamma)).is_prime();
        st.source = FermatSource::computed;
        st.note = "deterministic primality test";
        return st;
    }
    st.prime = false;
    st.factor = known_fermat_factor(gamma);
    if (gamma <= 6) {
        if (!divides_fermat_number(*st.factor, gamma))
            throw std::logic_error("fermat_status: stored factor does not divide F_" +
                                   std::to_string(gamma));
        st.source = FermatSource::small_factor;
        st.note = "factor verified by modular exponentiation";
        return st;
    }
    st.source = FermatSource::external;
    st.note = gamma == 14
                  ? "external: composite by Pepin test (Selfridge and Hurwitz), no factor known"
                  : "external: published Fermat factoring tables (Keller); factor listed";
    return st;
}

std::vector<StructuredPrime> gen_structured_primes(std::uint64_t n, std::uint64_t e_max)
{
    if (n < 1 || e_max < 1)
        throw std::invalid_argument("gen_structured_primes: n and e_max must be >= 1");

    std::vector<StructuredPrime> out;
    for (std::uint64_t m : odd_divisors(n)) {
        const BigInt mm = big_from_u64(m);
        const unsigned m_bits = static_cast<unsigned>(mpz_sizeinbase(mm.get_mpz_t(), 2));
        for (std::uint64_t e = 1; e <= e_max; ++e) {
            PrimalityVerdict v;
            if (m_bits <= e) {
                v = proth_test(mm, e);
            } else {
                BigInt value = mm;
                mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), e);
                v = is_prime(value + 1);
            }
            if (v.maybe_prime())
                out.push_back({m, e, v.value, v.is_prime()});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const StructuredPrime& a, const StructuredPrime& b) { return a.value < b.value; });
    return out;
}

std::vector<TwoThreePrime> gen_two_three_primes(const BigInt& limit)
{
    if (limit < 2)
        throw std::invalid_argument("gen_two_three_primes: limit must be >= 2");

    std::vector<TwoThreePrime> out;
    BigInt pow2 = 1;
    for (unsigned a = 0; pow2 + 1 <= limit; ++a, pow2 *= 2) {
        BigInt s = pow2;
        for (unsigned b = 0; s + 1 <= limit; ++b, s *= 3) {
            if (is_prime(s + 1).maybe_prime())
                out.push_back({a, b, s + 1});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TwoThreePrime& x, const TwoThreePrime& y) { return x.value < y.value; });
    return out;
}

} // namespace cullen
