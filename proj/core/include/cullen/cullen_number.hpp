#pragma once

#include "cullen/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cullen {

/// C_n = n*2^n + 1 together with the split n = 2^alpha * n1 (n1 odd),
/// which rewrites the value as n1 * 2^n2 + 1 with n2 = n + alpha.
struct CullenNumber {
    std::uint64_t n = 0;
    unsigned alpha = 0;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    BigInt value;
};

/// Builds C_n. Throws std::invalid_argument for n < 1.
CullenNumber cullen(std::int64_t n);

/// Prime factorization of a machine-sized integer by trial division,
/// ascending primes with multiplicities. factor_small(1) is empty.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n);

/// Odd divisors of n in ascending order. Throws for n = 0.
std::vector<std::uint64_t> odd_divisors(std::uint64_t n);

/// Number of set bits in x (x >= 0).
std::uint64_t binary_weight(const BigInt& x);

} // namespace cullen
