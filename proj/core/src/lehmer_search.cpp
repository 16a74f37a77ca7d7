#include "cullen/lehmer_search.hpp"

#include "cullen/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cullen {

std::string to_string(LehmerVerdict v)
{
    switch (v) {
    case LehmerVerdict::prime: return "prime";
    case LehmerVerdict::structurally_refuted: return "structurally_refuted";
    case LehmerVerdict::squarefree_refuted: return "squarefree_refuted";
    case LehmerVerdict::totient_refuted: return "totient_refuted";
    }
    return "?";
}

Factorization LehmerSearchResult::structured_part() const
{
    Factorization f;
    f.value = cullen.value;
    f.cofactor = cullen.value;
    for (std::size_t i = 0; i < structured_divisors.size(); ++i) {
        const auto& sp = structured_divisors[i];
        f.factors.push_back({sp.value, multiplicities[i], !sp.certified});
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), sp.value.get_mpz_t(), multiplicities[i]);
        f.cofactor /= pk;
    }
    f.status = f.cofactor == 1 ? FactorStatus::complete : FactorStatus::partial;
    return f;
}

namespace {

std::string explain_cofactor(const CullenNumber& c, const BigInt& cofactor)
{
    const PrimalityVerdict v = is_prime(cofactor);
    if (!v.maybe_prime())
        return "cofactor " + cofactor.get_str() +
               " is composite and coprime to every prime m*2^e+1 with m | " +
               std::to_string(c.n1) + ", e <= " + std::to_string(c.n2);

    const BigInt qm1 = cofactor - 1;
    const unsigned e = two_adic_valuation(qm1);
    BigInt m;
    mpz_tdiv_q_2exp(m.get_mpz_t(), qm1.get_mpz_t(), e);
    std::string s = "cofactor " + cofactor.get_str() + " is prime with q-1 = " + m.get_str() +
                    "*2^" + std::to_string(e) + "; ";
    if (!mpz_divisible_p(big_from_u64(c.n1).get_mpz_t(), m.get_mpz_t()))
        s += m.get_str() + " does not divide " + std::to_string(c.n);
    else
        s += "2-adic exponent " + std::to_string(e) + " exceeds " + std::to_string(c.n2);
    return s;
}

} // namespace

LehmerSearchResult lehmer_constrained_factor(std::uint64_t n)
{
    if (n < 1)
        throw std::invalid_argument("lehmer_constrained_factor: n must be >= 1");

    LehmerSearchResult r;
    r.n = n;
    r.cullen = cullen(static_cast<std::int64_t>(n));
    const BigInt& value = r.cullen.value;

    r.primality = proth_test(big_from_u64(r.cullen.n1), r.cullen.n2);
    if (r.primality.is_prime()) {
        r.verdict = LehmerVerdict::prime;
        if (const auto* w = std::get_if<ProthWitness>(&r.primality.certificate))
            r.witness.explanation = "Proth certificate with base " + std::to_string(w->base);
        else
            r.witness.explanation = "deterministic primality test";
        return r;
    }
    if (r.primality.status == Primality::probable_prime)
        throw BudgetExceeded("lehmer_constrained_factor: Proth base cap exhausted for C_" +
                             std::to_string(n));

    r.candidates = gen_structured_primes(n, r.cullen.n2);

    BigInt rest = value;
    for (const auto& sp : r.candidates) {
        unsigned k = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), sp.value.get_mpz_t())) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), sp.value.get_mpz_t());
            ++k;
        }
        if (k) {
            r.structured_divisors.push_back(sp);
            r.multiplicities.push_back(k);
        }
    }
    r.witness.cofactor = rest;

    const auto repeated = std::find_if(r.multiplicities.begin(), r.multiplicities.end(),
                                       [](unsigned k) { return k >= 2; });
    if (repeated != r.multiplicities.end()) {
        const auto& sp = r.structured_divisors[static_cast<std::size_t>(repeated - r.multiplicities.begin())];
        r.verdict = LehmerVerdict::squarefree_refuted;
        r.witness.repeated_prime = sp.value;
        r.witness.explanation = sp.value.get_str() + "^" + std::to_string(*repeated) +
                                " divides C_" + std::to_string(n) + ", so C_n is not squarefree";
        return r;
    }
    if (rest > 1) {
        r.verdict = LehmerVerdict::structurally_refuted;
        r.witness.explanation = explain_cofactor(r.cullen, rest);
        return r;
    }

    const bool uncertified = std::any_of(r.structured_divisors.begin(), r.structured_divisors.end(),
                                         [](const StructuredPrime& sp) { return !sp.certified; });
    if (uncertified)
        throw BudgetExceeded("lehmer_constrained_factor: structured factor of C_" +
                             std::to_string(n) + " is only a probable prime");

    BigInt phi = 1;
    for (const auto& sp : r.structured_divisors)
        phi *= sp.value - 1;
    if (mpz_divisible_p(BigInt(value - 1).get_mpz_t(), phi.get_mpz_t()))
        throw ProofViolation("lehmer_constrained_factor",
                             "C_" + std::to_string(n) + " is composite with phi | C_n - 1");
    r.verdict = LehmerVerdict::totient_refuted;
    r.witness.phi = phi;
    r.witness.explanation = "C_n splits into structured primes but phi(C_n) = " + phi.get_str() +
                            " does not divide C_n - 1";
    return r;
}

NpBoundCheck np_bound_check(std::uint64_t n, const BigInt& p)
{
    const CullenNumber c = cullen(static_cast<std::int64_t>(n));
    if (p <= 1 || p >= c.value || !mpz_divisible_p(c.value.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("np_bound_check: p must be a proper divisor of C_n above 1");

    NpBoundCheck chk;
    chk.np = two_adic_valuation(BigInt(p - 1));
    chk.holds = chk.np <= n;
    chk.lambda = c.value / p;
    const BigInt lm1 = chk.lambda - 1;
    chk.lambda_congruent = lm1 == 0 || two_adic_valuation(lm1) >= n;
    chk.lambda_below_n = chk.lambda < big_from_u64(n);
    return chk;
}

} // namespace cullen
