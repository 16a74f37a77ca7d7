#include "scan.hpp"

#include <cullen/errors.hpp>

#include <chrono>

namespace cullen::cli {

namespace {

Factorization prime_factorization(const BigInt& p)
{
    Factorization f;
    f.value = p;
    f.factors.push_back({p, 1, false});
    return f;
}

Factorization factor_cullen(const LehmerSearchResult& r, const ScanOptions& opts, FactorCache* cache)
{
    if (r.verdict == LehmerVerdict::prime)
        return prime_factorization(r.cullen.value);

    std::optional<Factorization> cached = cache ? cache->get(r.n) : std::nullopt;
    if (cached && cached->complete())
        return *cached;

    Factorization f = factor_with_known_primes(r.cullen.value, r.structured_part().factors, opts.budget);
    if (cache && (!cached || *cached != f))
        cache->put(r.n, f);
    return f;
}

} // namespace

ScanRow compute_row(std::uint64_t n, const ScanOptions& opts, FactorCache* cache)
{
    const auto start = std::chrono::steady_clock::now();
    ScanRow row;
    row.n = n;

    std::optional<LehmerSearchResult> r;
    try {
        r = lehmer_constrained_factor(n);
    } catch (const BudgetExceeded& e) {
        row.cullen_status = "unknown";
        row.verdict = "unknown";
        row.witness = e.what();
    }

    if (r) {
        row.cullen_status = r->verdict == LehmerVerdict::prime ? "prime" : "composite";
        row.verdict = to_string(r->verdict);
        row.witness = r->witness.explanation;
        if (r->verdict == LehmerVerdict::structurally_refuted)
            row.witness_cofactor = r->witness.cofactor;
        row.repeated_prime = r->witness.repeated_prime;
        for (const auto& sp : r->structured_divisors)
            row.structured_divisors.push_back(sp.value);

        if (opts.factor) {
            Factorization f = factor_cullen(*r, opts, cache);
            if (f.complete()) {
                if (is_lehmer(f.value, f))
                    throw ProofViolation("scan", "C_" + std::to_string(n) + " has the Lehmer property");
                row.ratio = lehmer_ratio(n, f);
                row.carmichael = is_carmichael(f.value, f);
            }
            row.factorization = std::move(f);
        }
    }

    if (opts.timing)
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace cullen::cli
