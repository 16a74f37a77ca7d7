#include "cullen/cullen_number.hpp"

#include <algorithm>
#include <stdexcept>

namespace cullen {

CullenNumber cullen(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("cullen: index must be >= 1, got " + std::to_string(n));

    CullenNumber c;
    c.n = static_cast<std::uint64_t>(n);
    c.alpha = two_adic_valuation(c.n);
    c.n1 = c.n >> c.alpha;
    c.n2 = c.n + c.alpha;
    // n1 * 2^n2 + 1 is the same number as n * 2^n + 1 and is cheaper to build.
    c.value = big_from_u64(c.n1);
    mpz_mul_2exp(c.value.get_mpz_t(), c.value.get_mpz_t(), c.n2);
    c.value += 1;
    return c;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n < 2)
        return out;
    auto strip = [&](std::uint64_t p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k)
            out.emplace_back(p, k);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("odd_divisors: n must be >= 1");

    std::vector<std::uint64_t> divs{1};
    for (auto [p, k] : factor_small(n)) {
        if (p == 2)
            continue;
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t binary_weight(const BigInt& x)
{
    if (sgn(x) < 0)
        throw std::invalid_argument("binary_weight: negative input");
    return mpz_popcount(x.get_mpz_t());
}

} // namespace cullen
