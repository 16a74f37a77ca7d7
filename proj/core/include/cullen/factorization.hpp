#pragma once

#include "cullen/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cullen {

struct PrimePower {
    BigInt prime;
    unsigned multiplicity = 1;
    bool probable = false; ///< prime only in the Miller-Rabin sense

    bool operator==(const PrimePower&) const = default;
};

enum class FactorStatus { complete, partial };

std::string to_string(FactorStatus s);

/// value = cofactor * prod(prime^multiplicity), primes strictly ascending.
/// When partial, cofactor > 1 is the unsplit remainder.
struct Factorization {
    BigInt value;
    std::vector<PrimePower> factors;
    FactorStatus status = FactorStatus::complete;
    BigInt cofactor = 1;

    bool complete() const { return status == FactorStatus::complete; }
    bool has_probable_factor() const;
    bool squarefree() const;
    /// "5 7 11", "3^2"; exponent suffix omitted when 1.
    std::string summary() const;
    /// Product check: cofactor * prod(p^k) == value and primes ascending.
    bool consistent() const;

    bool operator==(const Factorization&) const = default;
};

/// Effort limits for general_factor. Everything is counted in iterations so
/// results do not depend on machine speed.
struct FactorBudget {
    std::uint64_t rho_iterations = 300000;
    std::uint32_t trial_bound = 1u << 16;
};

/// Trial division up to budget.trial_bound, then Brent/Pollard rho with the
/// polynomial schedule x^2 + c, c = 1, 2, ..., starting at x = 2. Result is a
/// pure function of (n, budget). Requires n >= 2.
Factorization general_factor(const BigInt& n, const FactorBudget& budget = {});

/// Like general_factor, but first divides out primes already known to divide n.
Factorization factor_with_known_primes(const BigInt& n, const std::vector<PrimePower>& known,
                                       const FactorBudget& budget = {});

/// One Brent rho attempt with polynomial x^2 + c. Decrements `iterations`.
/// Returns a nontrivial factor or 0.
BigInt brent_rho(const BigInt& n, unsigned long c, std::uint64_t& iterations);

/// phi(value) = prod p^(k-1) (p-1). Throws std::invalid_argument when partial.
BigInt euler_phi(const Factorization& f);

} // namespace cullen
