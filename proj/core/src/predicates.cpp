#include "cullen/predicates.hpp"

#include "cullen/cullen_number.hpp"

#include <stdexcept>

namespace cullen {

namespace {

void require_complete(const BigInt& n, const Factorization& f, const char* who)
{
    if (n < 2)
        throw std::invalid_argument(std::string(who) + ": N must be >= 2");
    if (f.value != n)
        throw std::invalid_argument(std::string(who) + ": factorization is of a different value");
    if (!f.complete())
        throw std::invalid_argument(std::string(who) + ": factorization is partial");
}

bool composite_from(const Factorization& f)
{
    return !(f.factors.size() == 1 && f.factors.front().multiplicity == 1);
}

} // namespace

bool is_lehmer(const BigInt& n, const Factorization& f)
{
    require_complete(n, f, "is_lehmer");
    if (!composite_from(f))
        return false;
    const BigInt phi = euler_phi(f);
    return mpz_divisible_p(BigInt(n - 1).get_mpz_t(), phi.get_mpz_t()) != 0;
}

bool is_carmichael(const BigInt& n, const Factorization& f)
{
    require_complete(n, f, "is_carmichael");
    if (!composite_from(f) || !f.squarefree())
        return false;
    const BigInt nm1 = n - 1;
    for (const auto& pp : f.factors) {
        const BigInt pm1 = pp.prime - 1;
        if (!mpz_divisible_p(nm1.get_mpz_t(), pm1.get_mpz_t()))
            return false;
    }
    return true;
}

namespace {

bool fermat_congruence(const BigInt& n, const BigInt& a)
{
    if (a < 2)
        throw std::invalid_argument("is_pseudoprime: base must be >= 2");
    BigInt r, am = a % n;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t(), n.get_mpz_t());
    return r == am;
}

} // namespace

bool is_pseudoprime(const BigInt& n, const BigInt& a, const Factorization& f)
{
    if (n < 2 || f.value != n)
        throw std::invalid_argument("is_pseudoprime: factorization does not match N");
    bool composite = false;
    if (f.complete()) {
        composite = composite_from(f);
    } else if (!f.factors.empty()) {
        composite = true; // a proper prime factor is known
    } else {
        const PrimalityVerdict v = is_prime(n);
        if (v.status == Primality::probable_prime)
            throw std::invalid_argument("is_pseudoprime: compositeness of N is undecided");
        composite = !v.is_prime();
    }
    return composite && fermat_congruence(n, a);
}

bool is_pseudoprime(const BigInt& n, const BigInt& a, const PrimalityVerdict& v)
{
    if (n < 2 || v.value != n)
        throw std::invalid_argument("is_pseudoprime: verdict does not match N");
    if (v.status == Primality::probable_prime)
        throw std::invalid_argument("is_pseudoprime: compositeness of N is undecided");
    return v.status == Primality::composite && fermat_congruence(n, a);
}

RatioReport lehmer_ratio(std::uint64_t n, const Factorization& f)
{
    const CullenNumber c = cullen(static_cast<std::int64_t>(n));
    require_complete(c.value, f, "lehmer_ratio");
    RatioReport r;
    r.n = n;
    r.phi = euler_phi(f);
    const BigInt cm1 = c.value - 1;
    mpz_gcd(r.gcd_value.get_mpz_t(), cm1.get_mpz_t(), r.phi.get_mpz_t());
    r.ratio = Rational(r.phi, r.gcd_value);
    r.ratio.canonicalize();
    return r;
}

} // namespace cullen
