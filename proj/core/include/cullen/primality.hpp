#pragma once

#include "cullen/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cullen {

enum class Primality { prime, composite, probable_prime };

std::string to_string(Primality p);

/// Certificate payloads. Which one is attached depends on how the verdict
/// was reached.
struct ProthWitness {
    unsigned base = 0; ///< a with a^((N-1)/2) == -1 (mod N)
};
struct FactorWitness {
    BigInt factor; ///< 1 < factor < N, factor | N
};
struct EulerWitness {
    unsigned base = 0; ///< a^((N-1)/2) mod N is neither 1 nor N-1
    BigInt residue;
};
struct MillerRabinWitness {
    BigInt base; ///< strong-pseudoprime test failed for this base
};
struct DeterministicRegime {
    std::string description;
};
struct ProbabilisticRegime {
    unsigned rounds = 0;
};
struct BelowTwo {}; ///< 0 and 1: neither prime nor composite

using Certificate = std::variant<std::monostate, ProthWitness, FactorWitness, EulerWitness,
                                 MillerRabinWitness, DeterministicRegime, ProbabilisticRegime,
                                 BelowTwo>;

struct PrimalityVerdict {
    BigInt value;
    Primality status = Primality::composite;
    Certificate certificate;

    bool is_prime() const { return status == Primality::prime; }
    /// prime or probable_prime
    bool maybe_prime() const { return status != Primality::composite; }
};

/// Values below this are decided deterministically by strong-pseudoprime
/// tests to the first thirteen prime bases (Sorenson-Webster bound).
BigInt deterministic_mr_limit();

inline constexpr unsigned default_mr_rounds = 64;

/// General primality test. 0 and 1 come back composite with a BelowTwo
/// certificate. Above deterministic_mr_limit() the answer is probable_prime
/// after `rounds` Miller-Rabin rounds with reproducible pseudo-random bases.
PrimalityVerdict is_prime(const BigInt& n, unsigned rounds = default_mr_rounds);

/// Number of prime bases the Proth search tries before giving up.
inline constexpr unsigned proth_base_cap = 64;

/// Proth test for N = k*2^e + 1 with odd k < 2^e. Bases are the first
/// proth_base_cap primes in ascending order. Throws std::invalid_argument
/// when k is even, k < 1, e < 1 or k >= 2^e.
PrimalityVerdict proth_test(const BigInt& k, std::uint64_t e);

/// First `count` primes, ascending (count <= 6542, the primes below 2^16).
std::span<const unsigned> small_primes(std::size_t count);

struct FermatPrime {
    unsigned gamma = 0;
    BigInt value;
};

/// The five known Fermat primes F_0..F_4.
std::vector<FermatPrime> fermat_primes();

/// F_gamma = 2^(2^gamma) + 1
BigInt fermat_number(unsigned gamma);

enum class FermatSource {
    computed,     ///< deterministic primality test (gamma <= 4)
    small_factor, ///< factor re-verified on every call (gamma 5, 6)
    external,     ///< published table datum, not recomputed here
};

struct FermatStatus {
    unsigned gamma = 0;
    bool prime = false;
    std::optional<BigInt> factor;
    FermatSource source = FermatSource::computed;
    std::string note;
};

/// Classification of F_gamma for 0 <= gamma <= 18.
FermatStatus fermat_status(unsigned gamma);

/// Published factor of F_gamma for composite Fermat numbers with a known
/// small factor (F_14 has none). Used to cross-check the table cheaply.
std::optional<BigInt> known_fermat_factor(unsigned gamma);

/// True when f | F_gamma, checked as 2^(2^gamma) == -1 (mod f).
bool divides_fermat_number(const BigInt& f, unsigned gamma);

/// Prime of shape m*2^e + 1 with m odd.
struct StructuredPrime {
    std::uint64_t m = 1;
    std::uint64_t e = 1;
    BigInt value;
    bool certified = true; ///< false when only probable
};

/// All primes m*2^e+1 with m an odd divisor of n and 1 <= e <= e_max,
/// ascending by value.
std::vector<StructuredPrime> gen_structured_primes(std::uint64_t n, std::uint64_t e_max);

struct TwoThreePrime {
    unsigned a = 0;
    unsigned b = 0;
    BigInt value;
};

/// All primes 2^a*3^b + 1 <= limit, ascending. Includes 2 and 3.
std::vector<TwoThreePrime> gen_two_three_primes(const BigInt& limit);

} // namespace cullen
