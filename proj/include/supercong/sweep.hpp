#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/checks.hpp"

namespace supercong {

/// Primes in [lo, hi] by a segmented sieve of Eratosthenes.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Returns a previously recorded row for (id, p, params), if any.
using CacheLookup = std::function<std::optional<CheckResult>(const std::string& id, u64 p, const std::string& params)>;

struct SweepConfig {
    std::vector<std::string> ids;
    std::vector<u64> primes;
    unsigned jobs = 1;
    CheckOptions options;
    CacheLookup cache;
    /// Stop claiming new primes after the first fail or precision_error.
    /// Rows already computed are still returned.
    bool fail_fast = false;
};

struct SweepStats {
    std::atomic<size_t> evaluations{0};
    std::atomic<size_t> cache_hits{0};
};

/// Evaluates every (id, p, params) triple. Rows are ordered by
/// (p, id, params position) whatever the worker count.
std::vector<CheckResult> sweep(const SweepConfig& config, SweepStats* stats = nullptr);

}  // namespace supercong
