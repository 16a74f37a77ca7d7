#pragma once

#include <cullen/factor_cache.hpp>
#include <cullen/factorization.hpp>
#include <cullen/lehmer_search.hpp>
#include <cullen/predicates.hpp>

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cullen::cli {

/// One line of scan output. Never carries a "Lehmer" verdict: the pipeline
/// throws ProofViolation instead.
struct ScanRow {
    std::uint64_t n = 0;
    std::string cullen_status; ///< prime | composite | unknown
    std::string verdict;       ///< LehmerVerdict name, or "unknown" on budget exhaustion
    std::string witness;
    std::optional<BigInt> witness_cofactor;
    std::optional<BigInt> repeated_prime;
    std::vector<BigInt> structured_divisors;
    std::optional<Factorization> factorization; ///< absent when factoring was skipped
    std::optional<RatioReport> ratio;
    std::optional<bool> carmichael;
    std::optional<double> elapsed_ms;
};

struct ScanOptions {
    bool factor = true;
    bool timing = false;
    FactorBudget budget;
};

/// Refutation pipeline for one index: constrained search, then (optionally)
/// general factoring of the cofactor for the ratio and Korselt columns.
/// `cache` may be null.
ScanRow compute_row(std::uint64_t n, const ScanOptions& opts, FactorCache* cache);

/// Runs fn over [first, last] on `workers` threads and hands the results to
/// emit in ascending order. An exception from fn is rethrown on the calling
/// thread once every earlier result has been emitted.
template <class T>
void ordered_parallel_for(std::uint64_t first, std::uint64_t last, unsigned workers,
                          const std::function<T(std::uint64_t)>& fn,
                          const std::function<void(T&&)>& emit)
{
    if (first > last)
        return;
    const std::uint64_t count = last - first + 1;
    workers = std::max(1u, workers);

    struct Slot {
        std::optional<T> value;
        std::exception_ptr error;
        bool done = false;
    };
    std::vector<Slot> slots(count);
    std::mutex mu;
    std::condition_variable cv;
    std::uint64_t next = 0;
    bool stop = false;

    auto work = [&] {
        for (;;) {
            std::uint64_t i;
            {
                std::lock_guard lock(mu);
                if (stop || next == count)
                    return;
                i = next++;
            }
            Slot result;
            try {
                result.value.emplace(fn(first + i));
            } catch (...) {
                result.error = std::current_exception();
            }
            result.done = true;
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(result);
            }
            cv.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);

    std::exception_ptr failure;
    for (std::uint64_t i = 0; i < count && !failure; ++i) {
        Slot slot;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[i].done; });
            slot = std::move(slots[i]);
        }
        if (slot.error) {
            failure = slot.error;
            std::lock_guard lock(mu);
            stop = true;
            break;
        }
        emit(std::move(*slot.value));
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace cullen::cli
