#include "cullen/proof_verifier.hpp"

#include "cullen/cullen_number.hpp"
#include "cullen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cullen {

namespace {

Interval ln(std::uint64_t n) { return log(Interval(big_from_u64(n))); }

Interval interval_of(std::uint64_t n) { return Interval(big_from_u64(n)); }

} // namespace

KUpperBound k_upper(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("k_upper: n must be >= 2");
    const Interval l = ln(n);
    KUpperBound k;
    k.exact = Interval(1) + l / log(Interval(2)) + l / log(Interval(3));
    k.simplified = Interval(1) + Interval(Rational(12, 5)) * l;
    k.exact_below_simplified = k.exact.certainly_less(k.simplified);
    return k;
}

Interval k_lower_formula(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("k_lower: n must be >= 2");
    return sqrt(interval_of(n)) / (Interval(6) * sqrt(ln(n)));
}

Interval k_lower(std::uint64_t n)
{
    if (n < 30)
        throw std::invalid_argument("k_lower: n must be >= 30");
    return k_lower_formula(n);
}

std::uint64_t pigeonhole_grid_side(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("pigeonhole_grid_side: n must be >= 2");
    const Interval root = sqrt(interval_of(n) / ln(n));
    if (auto f = root.floor())
        return static_cast<std::uint64_t>(*f);
    // n / ln n is never a perfect square for n >= 2, so this is unreachable
    // at 256-bit precision.
    throw std::logic_error("pigeonhole_grid_side: floor undecided for n = " + std::to_string(n));
}

bool PigeonholePair::coprime() const
{
    return std::gcd(u, v) == 1;
}

bool PigeonholePair::within_grid() const
{
    if (n < 2)
        return false;
    const auto m = static_cast<std::uint64_t>(std::max(std::abs(u), std::abs(v)));
    return (interval_of(n) / ln(n)).certainly_at_least(interval_of(m * m));
}

bool PigeonholePair::combo_bounded() const
{
    if (n < 2)
        return false;
    const auto c = static_cast<std::uint64_t>(std::abs(combo));
    return interval_of(c).certainly_less(Interval(3) * sqrt(interval_of(n) * ln(n)));
}

PigeonholePair pigeonhole_pair(std::uint64_t n, std::uint64_t np)
{
    if (n < 2 || np < 1 || np > n)
        throw std::invalid_argument("pigeonhole_pair: need n >= 2 and 1 <= np <= n");
    if (n > (std::uint64_t{1} << 40))
        throw std::invalid_argument("pigeonhole_pair: n too large for the grid enumeration");

    const std::uint64_t side = pigeonhole_grid_side(n);
    struct Point {
        std::int64_t value;
        std::int64_t a;
        std::int64_t b;
    };
    std::vector<Point> grid;
    grid.reserve((side + 1) * (side + 1));
    const auto nn = static_cast<std::int64_t>(n);
    const auto pp = static_cast<std::int64_t>(np);
    for (std::int64_t a = 0; a <= static_cast<std::int64_t>(side); ++a)
        for (std::int64_t b = 0; b <= static_cast<std::int64_t>(side); ++b)
            grid.push_back({a * nn + b * pp, a, b});
    std::sort(grid.begin(), grid.end(), [](const Point& x, const Point& y) {
        return std::tie(x.value, x.a, x.b) < std::tie(y.value, y.a, y.b);
    });

    std::int64_t gap = grid[1].value - grid[0].value;
    for (std::size_t i = 2; i < grid.size(); ++i)
        gap = std::min(gap, grid[i].value - grid[i - 1].value);

    // Every pair at the minimal gap is adjacent after sorting, so scanning
    // neighbours sees all of them.
    PigeonholePair best;
    bool have = false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i].value - grid[i - 1].value != gap)
            continue;
        std::int64_t u = grid[i].a - grid[i - 1].a;
        std::int64_t v = grid[i].b - grid[i - 1].b;
        const std::int64_t d = std::gcd(u, v);
        u /= d;
        v /= d;
        if (u < 0 || (u == 0 && v < 0)) {
            u = -u;
            v = -v;
        }
        if (!have || std::make_pair(u, std::abs(v)) < std::make_pair(best.u, std::abs(best.v))) {
            best.u = u;
            best.v = v;
            have = true;
        }
    }
    best.n = n;
    best.np = np;
    best.grid_side = side;
    best.combo = best.u * nn + best.v * pp;
    return best;
}

AExpression a_expression(std::uint64_t n, std::uint64_t m_p, std::uint64_t n_p, std::int64_t u,
                         std::int64_t v)
{
    if (n < 1 || m_p < 1 || m_p % 2 == 0 || n % m_p != 0)
        throw std::invalid_argument("a_expression: m_p must be an odd divisor of n");
    if (n_p < 1)
        throw std::invalid_argument("a_expression: n_p must be >= 1");
    if (u < 0 || (u == 0 && v == 0))
        throw std::invalid_argument("a_expression: need u >= 0 and (u, v) != (0, 0)");

    AExpression x;
    x.n = n;
    x.m_p = m_p;
    x.n_p = n_p;
    x.u = u;
    x.v = v;

    const BigInt bn = big_from_u64(n), bm = big_from_u64(m_p);
    BigInt num = 1, den = 1, t;
    mpz_pow_ui(t.get_mpz_t(), bn.get_mpz_t(), static_cast<unsigned long>(u));
    num *= t;
    mpz_pow_ui(t.get_mpz_t(), bm.get_mpz_t(), static_cast<unsigned long>(std::abs(v)));
    (v >= 0 ? num : den) *= t;
    // n*u + n_p*v exactly; either product can overflow 64 bits in principle.
    const BigInt e2 = bn * BigInt(static_cast<long>(u)) + big_from_u64(n_p) * BigInt(static_cast<long>(v));
    const BigInt mag = abs(e2);
    if (mag > (BigInt(1) << 32))
        throw std::invalid_argument("a_expression: 2-power exponent too large");
    (sgn(e2) >= 0 ? num : den) <<= static_cast<mp_bitcnt_t>(mag.get_ui());

    x.value = Rational(num, den);
    x.value.canonicalize();
    x.value -= ((u + v) % 2 == 0) ? 1 : -1;
    x.numerator = x.value.get_num();

    if (x.value == 0) {
        BigInt p = bm;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n_p);
        p += 1;
        if (p == cullen(static_cast<std::int64_t>(n)).value)
            throw std::invalid_argument("a_expression: m_p*2^n_p + 1 equals C_n, where A vanishes");
        throw ProofViolation("a_expression", "A = 0 for n=" + std::to_string(n) +
                                                 ", m_p=" + std::to_string(m_p) +
                                                 ", n_p=" + std::to_string(n_p) +
                                                 ", u=" + std::to_string(u) + ", v=" + std::to_string(v));
    }

    if (n >= 30) {
        x.bound_applicable = true;
        const Interval expo = Interval(6) * sqrt(interval_of(n) * ln(n));
        x.bound_exponent = static_cast<std::uint64_t>(std::ceil(expo.upper()));
        mpz_setbit(x.numerator_bound.get_mpz_t(), x.bound_exponent);
        const BigInt mag_num = abs(x.numerator);
        x.within_bound = (log(Interval(mag_num)) / log(Interval(2))).certainly_less(expo);
    }
    return x;
}

bool divisibility_check(std::uint64_t n, const StructuredPrime& p, const PigeonholePair& pair)
{
    const CullenNumber c = cullen(static_cast<std::int64_t>(n));
    if (!mpz_divisible_p(c.value.get_mpz_t(), p.value.get_mpz_t()))
        throw std::invalid_argument("divisibility_check: p does not divide C_n");
    if (pair.n != n || pair.np != p.e)
        throw std::invalid_argument("divisibility_check: pair was built for other (n, n_p)");
    const AExpression a = a_expression(n, p.m, p.e, pair.u, pair.v);
    return mpz_divisible_p(a.numerator.get_mpz_t(), p.value.get_mpz_t()) != 0;
}

bool fermat_binary_obstruction(std::span<const unsigned> gammas)
{
    std::vector<unsigned> g(gammas.begin(), gammas.end());
    std::sort(g.begin(), g.end());
    if (g.size() < 2 || std::adjacent_find(g.begin(), g.end()) != g.end())
        throw std::invalid_argument("fermat_binary_obstruction: need at least two distinct gammas");
    if (g.back() > 24)
        throw std::invalid_argument("fermat_binary_obstruction: gamma above 24 is not supported");

    BigInt product = 1;
    for (unsigned gamma : g)
        product *= fermat_number(gamma);
    const std::uint64_t expected = std::uint64_t{1} << g.size();
    return binary_weight(product) == expected && expected > 2;
}

Rational exp_upper_bound(const Rational& x, unsigned terms)
{
    if (x < 0)
        throw std::invalid_argument("exp_upper_bound: x must be >= 0");
    Rational sum = 0, term = 1;
    for (unsigned k = 0; k <= terms; ++k) {
        if (k)
            term = term * x / k;
        sum += term;
    }
    // Remainder x^(K+1)/(K+1)! * e^x with e^x <= 3^ceil(x).
    const Rational next = term * x / (terms + 1);
    BigInt ceil_x;
    mpz_cdiv_q(ceil_x.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    BigInt three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, ceil_x.get_ui());
    sum += next * Rational(three_pow);
    sum.canonicalize();
    return sum;
}

ProductBound two_three_product_bound(const BigInt& cap)
{
    if (cap < 2)
        throw std::invalid_argument("two_three_product_bound: cap must be >= 2");

    ProductBound pb;
    pb.cap = cap;
    pb.partial_product = 1;
    for (const auto& tp : gen_two_three_primes(cap)) {
        if (tp.value <= 3)
            continue;
        pb.primes.push_back(tp.value);
        pb.partial_product *= Rational(tp.value, tp.value - 1);
        pb.partial_product.canonicalize();
        if (!pb.published_constant_exceeded_at &&
            pb.partial_product > Rational(146, 100))
            pb.published_constant_exceeded_at = tp.value;
    }

    // sum of 1/s over 3-smooth s >= cap, column by column in the power of 2:
    // a column with 2^a < cap starts at the first 2^a 3^b >= cap and is a
    // geometric series with ratio 1/3; columns with 2^a >= cap add up to
    // 3/2^a0 in total.
    Rational tail = 0;
    BigInt pow2 = 1;
    while (pow2 < cap) {
        BigInt s = pow2;
        while (s < cap)
            s *= 3;
        tail += Rational(BigInt(3), BigInt(2 * s));
        pow2 *= 2;
    }
    tail += Rational(BigInt(3), pow2);
    tail.canonicalize();
    pb.tail_bound = tail;
    pb.exp_tail_upper = exp_upper_bound(tail);
    pb.total_upper = pb.partial_product * pb.exp_tail_upper;
    pb.total_upper.canonicalize();
    pb.below_two = pb.total_upper < 2;
    return pb;
}

} // namespace cullen
