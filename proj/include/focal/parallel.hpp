#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace focal {

/// Resolves a worker count: explicit request wins, then the
/// FOCALBOUND_WORKERS environment variable, then hardware concurrency.
inline int worker_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FOCALBOUND_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, n) on the given number of workers. Work items
/// must be independent; results should be written to per-index slots so the
/// outcome does not depend on the worker count.
inline void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    workers = worker_count(workers);
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = static_cast<std::size_t>(t); i < n;
                 i += static_cast<std::size_t>(workers))
                fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace focal
