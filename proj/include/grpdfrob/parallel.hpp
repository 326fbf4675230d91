// Tiny fork-join helper for the exhaustive axiom sweeps. All shared state is
// read-only; each worker owns a disjoint index range and its own result slot,
// so merged output is independent of scheduling.
#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace grpdfrob {

// GRPDFROB_THREADS caps worker count; 0 or unset means hardware concurrency.
inline int thread_limit() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("GRPDFROB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v < static_cast<long>(hw) ? v : hw);
    }
    return static_cast<int>(hw);
}

// Runs body(begin, end) over a partition of [0, n). body must not touch
// another chunk's state.
inline void parallel_chunks(long n, const std::function<void(long, long)>& body) {
    if (n <= 0) return;
    int workers = thread_limit();
    if (workers <= 1 || n < 1024) {
        body(0, n);
        return;
    }
    long chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (long begin = 0; begin < n; begin += chunk) {
        long end = begin + chunk < n ? begin + chunk : n;
        pool.emplace_back(body, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace grpdfrob
