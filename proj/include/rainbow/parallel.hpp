#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rainbow {

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks; callers
// write results into per-index slots so the outcome is independent of the
// worker count.
inline void parallel_for(int64_t n, int threads, const std::function<void(int64_t)>& fn) {
    if (n <= 0) return;
    if (threads < 1) threads = 1;
    if (threads == 1 || n == 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<int64_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int64_t lo = w * chunk;
        int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace rainbow
