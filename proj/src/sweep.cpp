#include "supercong/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace supercong {

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || lo > hi) return out;
    lo = std::max<u64>(lo, 2);
    const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 1;

    std::vector<bool> small_composite(root + 1, false);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (small_composite[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small_composite[j] = true;
    }

    constexpr u64 kSegment = 1 << 16;
    std::vector<bool> composite;
    for (u64 start = lo; start <= hi; start += kSegment) {
        const u64 end = std::min(hi, start + kSegment - 1);
        composite.assign(end - start + 1, false);
        for (u64 q : base) {
            if (q * q > end) break;
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j <= end; j += q) composite[j - start] = true;
        }
        for (u64 n = start; n <= end; ++n)
            if (!composite[n - start]) out.push_back(n);
        if (end == hi) break;
    }
    return out;
}

namespace {

bool bad(const CheckResult& r) { return r.status == Status::fail || r.status == Status::precision_error; }

}  // namespace

std::vector<CheckResult> sweep(const SweepConfig& config, SweepStats* stats) {
    std::vector<const CheckDefinition*> defs;
    std::vector<std::vector<CheckParam>> params;
    for (const auto& id : config.ids) {
        defs.push_back(&find_check(id));
        params.push_back(defs.back()->params(config.options));
    }

    std::vector<std::vector<CheckResult>> per_prime(config.primes.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};

    auto work = [&] {
        for (;;) {
            if (config.fail_fast && stop.load()) return;
            const size_t i = next.fetch_add(1);
            if (i >= config.primes.size()) return;
            const u64 p = config.primes[i];
            std::optional<PrimeEnv> env;  // built on first real evaluation
            auto& rows = per_prime[i];
            for (size_t d = 0; d < defs.size(); ++d) {
                const auto& def = *defs[d];
                for (size_t k = 0; k < params[d].size(); ++k) {
                    const auto& param = params[d][k];
                    if (p < def.min_prime) {
                        rows.push_back(skipped_row(def, p, param, k,
                                                   "needs p >= " + std::to_string(def.min_prime)));
                        continue;
                    }
                    if (config.cache) {
                        if (auto hit = config.cache(def.id, p, param.label)) {
                            hit->order = k;
                            rows.push_back(*hit);
                            if (stats) ++stats->cache_hits;
                            continue;
                        }
                    }
                    if (!env) env.emplace(p, config.options);
                    rows.push_back(evaluate(def, *env, param, k));
                    if (stats) ++stats->evaluations;
                    if (bad(rows.back())) stop = true;
                }
            }
        }
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<CheckResult> out;
    for (auto& rows : per_prime)
        for (auto& r : rows) out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.check != b.check) return a.check < b.check;
        return a.order < b.order;
    });
    return out;
}

}  // namespace supercong
