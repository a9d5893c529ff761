#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace clusterforge {

/// Runs fn(0..count-1), fanning out to a worker pool when threads != 1.
/// Callers own determinism: results must be written to preassigned slots.
template <typename Fn>
void parallel_for(int64_t count, int threads, Fn&& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int64_t> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace clusterforge
