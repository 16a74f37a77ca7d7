#pragma once

#include "cullen/factorization.hpp"
#include "cullen/primality.hpp"

#include <cstdint>

namespace cullen {

// All predicates take an explicit factorization of N and reject one whose
// value is not N. Factoring effort stays with the caller.

/// N composite and phi(N) | N - 1. Requires a complete factorization.
bool is_lehmer(const BigInt& n, const Factorization& f);

/// Korselt: N composite, squarefree, p - 1 | N - 1 for every p | N.
bool is_carmichael(const BigInt& n, const Factorization& f);

/// N composite and a^N == a (mod N). Compositeness must be decidable from
/// the evidence, otherwise std::invalid_argument.
bool is_pseudoprime(const BigInt& n, const BigInt& a, const Factorization& f);
bool is_pseudoprime(const BigInt& n, const BigInt& a, const PrimalityVerdict& v);

/// phi(C_n) / gcd(C_n - 1, phi(C_n)), kept exact.
struct RatioReport {
    std::uint64_t n = 0;
    BigInt phi;
    BigInt gcd_value;
    Rational ratio;
};

RatioReport lehmer_ratio(std::uint64_t n, const Factorization& f);

} // namespace cullen
