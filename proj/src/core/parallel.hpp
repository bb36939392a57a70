#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace nullfront {

/// Worker count: NULLFRONT_THREADS caps it, default is the hardware count.
inline unsigned thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("NULLFRONT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
    }
    return n;
}

/// Static block partition; each index is visited exactly once, so bodies
/// writing to disjoint preallocated slots stay deterministic.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
    const unsigned workers = thread_budget();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        if (lo >= count) break;
        const std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nullfront
