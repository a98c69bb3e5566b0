#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hcrep {

/// Runs body(i) for i in [0, n) on up to `threads` worker threads (0 = the
/// hardware concurrency) with a static round-robin partition. body must only
/// write to per-index state.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace hcrep
