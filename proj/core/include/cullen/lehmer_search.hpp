#pragma once

#include "cullen/cullen_number.hpp"
#include "cullen/factorization.hpp"
#include "cullen/primality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cullen {

enum class LehmerVerdict { prime, structurally_refuted, squarefree_refuted, totient_refuted };

std::string to_string(LehmerVerdict v);

struct LehmerWitness {
    BigInt cofactor = 1;                 ///< structurally_refuted: the unexplained part of C_n
    std::optional<BigInt> repeated_prime; ///< squarefree_refuted: p with p^2 | C_n
    std::optional<BigInt> phi;           ///< totient_refuted: phi(C_n), which does not divide C_n - 1
    std::string explanation;
};

/// Outcome of dividing C_n by every prime that could divide a Lehmer C_n.
///
/// If phi(C_n) | C_n - 1 then every prime p | C_n has p - 1 | n1 * 2^n2, so
/// p = m*2^e + 1 with m | n1 and 1 <= e <= n2. The candidate list below is that
/// whole set, which makes the three refutation routes exhaustive.
struct LehmerSearchResult {
    std::uint64_t n = 0;
    CullenNumber cullen;
    PrimalityVerdict primality;              ///< Proth verdict on C_n itself
    std::vector<StructuredPrime> candidates; ///< empty when C_n is prime
    std::vector<StructuredPrime> structured_divisors;
    std::vector<unsigned> multiplicities; ///< parallel to structured_divisors
    LehmerVerdict verdict = LehmerVerdict::prime;
    LehmerWitness witness;

    /// structured_divisors with multiplicities, the cofactor left partial.
    Factorization structured_part() const;
};

/// Runs the constrained search for C_n. Throws BudgetExceeded if C_n cannot
/// be certified either way, and ProofViolation if C_n turns out to be a
/// Lehmer number.
LehmerSearchResult lehmer_constrained_factor(std::uint64_t n);

/// Replay of the argument that a proper prime factor p of C_n has
/// v2(p - 1) <= n. lambda = C_n / p; if v2(p - 1) > n then 2^n | lambda - 1
/// while 1 < lambda < n, which is impossible.
struct NpBoundCheck {
    bool holds = false;
    std::uint64_t np = 0; ///< v2(p - 1)
    BigInt lambda;
    bool lambda_congruent = false; ///< 2^n | lambda - 1
    bool lambda_below_n = false;

    explicit operator bool() const { return holds; }
};

/// Requires p | C_n and 1 < p < C_n; throws std::invalid_argument otherwise.
NpBoundCheck np_bound_check(std::uint64_t n, const BigInt& p);

} // namespace cullen
