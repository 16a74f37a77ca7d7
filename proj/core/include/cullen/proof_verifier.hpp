#pragma once

#include "cullen/interval.hpp"
#include "cullen/numeric.hpp"
#include "cullen/primality.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cullen {

// Logarithms are natural throughout. Real-valued quantities come back as
// Interval so that every comparison made on them is certified.

/// Upper bounds on k, the number of distinct primes of a Lehmer C_n:
/// exact = 1 + ln n/ln 2 + ln n/ln 3, simplified = 1 + 2.4 ln n.
struct KUpperBound {
    Interval exact;
    Interval simplified;
    bool exact_below_simplified = false; ///< certified exact < simplified
};

/// Requires n >= 2.
KUpperBound k_upper(std::uint64_t n);

/// sqrt(n) / (6 sqrt(ln n)), the lower bound on k forced by the prime-size
/// bound. Requires n >= 30. Use .lower() for the certified value.
Interval k_lower(std::uint64_t n);

/// Same formula without the n >= 30 guard, for crossing-point searches.
Interval k_lower_formula(std::uint64_t n);

/// floor(sqrt(n / ln n)), computed with certified rounding. n >= 2.
std::uint64_t pigeonhole_grid_side(std::uint64_t n);

/// Coprime (u, v) with u >= 0 and small |u*n + v*np|.
struct PigeonholePair {
    std::uint64_t n = 0;
    std::uint64_t np = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t combo = 0; ///< u*n + v*np
    std::uint64_t grid_side = 0;

    bool nonzero() const { return u != 0 || v != 0; }
    bool coprime() const;
    /// max(|u|, |v|) <= sqrt(n / ln n), certified.
    bool within_grid() const;
    /// |combo| < 3 sqrt(n ln n), certified.
    bool combo_bounded() const;
    bool satisfies_invariants() const
    {
        return nonzero() && coprime() && u >= 0 && within_grid() && combo_bounded();
    }

    bool operator==(const PigeonholePair&) const = default;
};

/// Sorts L(a, b) = a*n + b*np over the (N+1)^2 grid, N = grid side, and
/// returns the gcd-reduced, sign-normalized difference of the closest pair.
/// Ties on |combo| go to the smallest u, then the smallest |v|; with u = 0
/// the sign makes v > 0. Accepts n >= 2 (the argument itself needs n >= 30)
/// and 1 <= np <= n.
PigeonholePair pigeonhole_pair(std::uint64_t n, std::uint64_t np);

/// A = n^u * m^v * 2^(n*u + np*v) - (-1)^(u+v), exact.
struct AExpression {
    std::uint64_t n = 0;
    std::uint64_t m_p = 0;
    std::uint64_t n_p = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
    Rational value;
    BigInt numerator;              ///< of value in lowest terms
    std::uint64_t bound_exponent = 0; ///< ceil(6 sqrt(n ln n)); 0 below n = 30
    BigInt numerator_bound;        ///< 2^bound_exponent
    bool bound_applicable = false; ///< n >= 30
    bool within_bound = false;     ///< certified |numerator| < 2^(6 sqrt(n ln n))
};

/// Throws std::invalid_argument on bad inputs (m_p even or not dividing n,
/// n_p < 1, u < 0, (u, v) = (0, 0)) and when A vanishes because
/// m_p*2^n_p + 1 is C_n itself. Any other A = 0 throws ProofViolation.
AExpression a_expression(std::uint64_t n, std::uint64_t m_p, std::uint64_t n_p, std::int64_t u,
                         std::int64_t v);

/// p divides the numerator of A for the pair built on (n, p.e). p must
/// divide C_n and pair must belong to (n, p.e).
bool divisibility_check(std::uint64_t n, const StructuredPrime& p, const PigeonholePair& pair);

/// prod (2^(2^g) + 1) over distinct gammas has binary weight 2^|gammas|,
/// so it is never 2^t + 1. Requires at least two distinct gammas.
bool fermat_binary_obstruction(std::span<const unsigned> gammas);

/// Certified upper bound on prod (1 + 1/(p-1)) over primes p = 2^a 3^b + 1,
/// p not in {2, 3}.
struct ProductBound {
    BigInt cap;
    std::vector<BigInt> primes;  ///< contributing primes <= cap
    Rational partial_product;    ///< over primes <= cap
    Rational tail_bound;         ///< >= sum of 1/(p-1) over primes > cap
    Rational exp_tail_upper;     ///< >= exp(tail_bound)
    Rational total_upper;        ///< partial_product * exp_tail_upper
    bool below_two = false;

    static constexpr double published_constant = 1.46;
    /// Prime at which the running product first exceeds the published constant.
    std::optional<BigInt> published_constant_exceeded_at;
};

/// Requires cap >= 2. The contract total_upper < 2 holds from cap = 10^3 up.
ProductBound two_three_product_bound(const BigInt& cap);

/// Rational upper bound on exp(x) for 0 <= x: Taylor polynomial of degree
/// `terms` plus a Lagrange remainder bound.
Rational exp_upper_bound(const Rational& x, unsigned terms = 30);

} // namespace cullen
