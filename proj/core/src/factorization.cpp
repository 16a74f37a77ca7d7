#include "cullen/factorization.hpp"

#include "cullen/primality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cullen {

std::string to_string(FactorStatus s)
{
    return s == FactorStatus::complete ? "complete" : "partial";
}

bool Factorization::has_probable_factor() const
{
    return std::any_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.probable; });
}

bool Factorization::squarefree() const
{
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.multiplicity == 1; });
}

std::string Factorization::summary() const
{
    std::string s;
    for (const auto& pp : factors) {
        if (!s.empty())
            s += ' ';
        s += pp.prime.get_str();
        if (pp.multiplicity != 1)
            s += '^' + std::to_string(pp.multiplicity);
    }
    return s;
}

bool Factorization::consistent() const
{
    BigInt prod = cofactor;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i && !(factors[i - 1].prime < factors[i].prime))
            return false;
        if (factors[i].multiplicity == 0)
            return false;
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), factors[i].prime.get_mpz_t(), factors[i].multiplicity);
        prod *= pk;
    }
    if (prod != value)
        return false;
    return complete() ? cofactor == 1 : cofactor > 1;
}

BigInt brent_rho(const BigInt& n, unsigned long c, std::uint64_t& iterations)
{
    constexpr std::uint64_t batch = 128;
    auto step = [&](BigInt& z) {
        z *= z;
        z += c;
        mpz_mod(z.get_mpz_t(), z.get_mpz_t(), n.get_mpz_t());
    };

    BigInt y = 2, x, ys, q = 1, g = 1, diff;
    std::uint64_t r = 1;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) {
            if (iterations == 0)
                return 0;
            step(y);
            --iterations;
        }
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                if (iterations == 0)
                    return 0;
                step(y);
                --iterations;
                diff = x - y;
                q *= abs(diff);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r *= 2;
    }
    if (g == n) {
        // The batched product overshot; replay the last batch one step at a time.
        do {
            if (iterations == 0)
                return 0;
            step(ys);
            --iterations;
            diff = x - ys;
            diff = abs(diff);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n || g == 1)
        return 0;
    return g;
}

namespace {

constexpr unsigned long rho_polynomials = 16;

// Exact k-th root of n for the largest k available, or k = 1.
std::pair<BigInt, unsigned> perfect_power_root(const BigInt& n)
{
    if (!mpz_perfect_power_p(n.get_mpz_t()))
        return {n, 1};
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
        BigInt r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0 && r > 1)
            return {r, static_cast<unsigned>(k)};
    }
    return {n, 1};
}

struct Accumulator {
    std::map<BigInt, PrimePower> primes;
    BigInt unfactored = 1;

    void add_prime(const BigInt& p, unsigned k, bool probable)
    {
        auto [it, inserted] = primes.try_emplace(p, PrimePower{p, 0, probable});
        it->second.multiplicity += k;
        it->second.probable = it->second.probable && probable;
    }

    Factorization finish(const BigInt& value) const
    {
        Factorization f;
        f.value = value;
        for (const auto& [p, pp] : primes)
            f.factors.push_back(pp);
        f.cofactor = unfactored;
        f.status = unfactored == 1 ? FactorStatus::complete : FactorStatus::partial;
        return f;
    }
};

void split_composites(BigInt rest, Accumulator& acc, const FactorBudget& budget)
{
    std::uint64_t iterations = budget.rho_iterations;
    // (value, multiplicity) pairs still to classify; LIFO keeps the order fixed.
    std::vector<std::pair<BigInt, unsigned>> work;
    if (rest > 1)
        work.emplace_back(std::move(rest), 1);

    while (!work.empty()) {
        auto [x, mult] = std::move(work.back());
        work.pop_back();
        if (x == 1)
            continue;

        const PrimalityVerdict v = is_prime(x);
        if (v.maybe_prime()) {
            acc.add_prime(x, mult, !v.is_prime());
            continue;
        }
        if (const auto* w = std::get_if<FactorWitness>(&v.certificate)) {
            BigInt other = x / w->factor;
            work.emplace_back(std::move(other), mult);
            work.emplace_back(w->factor, mult);
            continue;
        }
        if (auto [root, k] = perfect_power_root(x); k > 1) {
            work.emplace_back(root, mult * k);
            continue;
        }

        BigInt d = 0;
        for (unsigned long c = 1; c <= rho_polynomials && d == 0 && iterations > 0; ++c)
            d = brent_rho(x, c, iterations);
        if (d == 0) {
            BigInt xk;
            mpz_pow_ui(xk.get_mpz_t(), x.get_mpz_t(), mult);
            acc.unfactored *= xk;
            continue;
        }
        BigInt other = x / d;
        work.emplace_back(std::move(other), mult);
        work.emplace_back(std::move(d), mult);
    }
}

BigInt trial_divide(BigInt n, Accumulator& acc, std::uint32_t bound)
{
    for (unsigned p : small_primes(6542)) {
        if (p > bound)
            break;
        if (n < static_cast<unsigned long>(p) * p) {
            break;
        }
        unsigned k = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++k;
        }
        if (k)
            acc.add_prime(BigInt(p), k, false);
    }
    return n;
}

} // namespace

Factorization general_factor(const BigInt& n, const FactorBudget& budget)
{
    if (n < 2)
        throw std::invalid_argument("general_factor: n must be >= 2");
    Accumulator acc;
    BigInt rest = trial_divide(n, acc, budget.trial_bound);
    split_composites(std::move(rest), acc, budget);
    return acc.finish(n);
}

Factorization factor_with_known_primes(const BigInt& n, const std::vector<PrimePower>& known,
                                       const FactorBudget& budget)
{
    if (n < 2)
        throw std::invalid_argument("factor_with_known_primes: n must be >= 2");
    Accumulator acc;
    BigInt rest = n;
    for (const auto& pp : known) {
        unsigned k = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), pp.prime.get_mpz_t())) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), pp.prime.get_mpz_t());
            ++k;
        }
        if (k)
            acc.add_prime(pp.prime, k, pp.probable);
    }
    rest = trial_divide(std::move(rest), acc, budget.trial_bound);
    split_composites(std::move(rest), acc, budget);
    return acc.finish(n);
}

BigInt euler_phi(const Factorization& f)
{
    if (!f.complete())
        throw std::invalid_argument("euler_phi: factorization is partial");
    BigInt phi = 1;
    for (const auto& pp : f.factors) {
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), pp.multiplicity - 1);
        phi *= pk * (pp.prime - 1);
    }
    return phi;
}

} // namespace cullen
