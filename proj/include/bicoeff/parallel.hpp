#ifndef BICOEFF_PARALLEL_HPP
#define BICOEFF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bicoeff {

/// Worker count: min(hardware_concurrency, BICOEFF_THREADS if set), at least 1.
inline unsigned effective_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("BICOEFF_THREADS")) {
        const long requested = std::strtol(cap, nullptr, 10);
        if (requested >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(requested));
    }
    return n;
}

/// Runs fn(i) for i in [0, count) across worker threads. Callers write into
/// preallocated slot i only, so results are independent of scheduling.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    const unsigned workers = std::min<unsigned>(effective_threads(),
                                                static_cast<unsigned>(std::max(count, 1)));
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bicoeff

#endif
