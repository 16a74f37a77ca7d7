#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cullen {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_from_u64(std::uint64_t x)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Lowest-terms "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Exponent of 2 in x; x must be nonzero.
inline unsigned two_adic_valuation(const BigInt& x)
{
    return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
}

inline unsigned two_adic_valuation(std::uint64_t x)
{
    return static_cast<unsigned>(__builtin_ctzll(x));
}

} // namespace cullen
