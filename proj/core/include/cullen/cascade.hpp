#pragma once

#include "cullen/interval.hpp"
#include "cullen/proof_verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cullen {

/// Minimum number of distinct prime factors of a Lehmer number
/// (Cohen and Hagis, 1980). Consumed as an external fact.
inline constexpr unsigned lehmer_min_prime_factors = 14;

struct CascadeConstant {
    std::string name;
    std::string expression;
    Interval value;
    std::optional<double> expected; ///< published decimal, when there is one
    bool matches = true;            ///< |value - expected| <= constant_tolerance
};

inline constexpr double constant_tolerance = 5e-5;

struct CascadeStage {
    std::string name;
    std::string claim;
    std::optional<std::uint64_t> n_bound_in;  ///< n < this on entry
    std::optional<unsigned> k_bound;          ///< k <= this
    std::optional<std::uint64_t> n_bound_out; ///< n < this on exit
    std::vector<CascadeConstant> constants;
    bool passed = false;
    std::string note;
};

struct ExternalFact {
    std::string name;
    std::string value;
    std::string citation;
};

struct BoundCascade {
    std::vector<CascadeStage> stages;
    std::vector<ExternalFact> external;
    ProductBound product;
    bool all_passed = false;
    std::string verdict; ///< "contradiction established" or "falsified at stage <name>"
};

inline const BigInt default_product_cap{10000000};

/// Replays the chain of numeric bounds with interval arithmetic. Failing
/// stages are reported, not thrown.
BoundCascade cascade_verify(const BigInt& product_cap = default_product_cap);

/// Smallest n in [lo, hi] with k_lower_formula(n) certainly >= threshold(n),
/// assuming the predicate is monotone on the range; nullopt if none.
std::optional<std::uint64_t> k_lower_crossing(std::uint64_t lo, std::uint64_t hi,
                                              const Interval& constant_threshold);

/// Smallest n in [lo, hi] with k_lower(n) certainly above 1 + 2.4 ln n.
std::optional<std::uint64_t> k_bounds_crossing(std::uint64_t lo, std::uint64_t hi);

} // namespace cullen
