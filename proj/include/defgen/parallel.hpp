#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace defgen {

// Runs fn(j) for j in [0, ny). Each row writes only its own outputs, so the
// result is identical for any thread count.
template <class Fn>
void parallel_rows(int ny, int threads, Fn&& fn) {
    if (threads <= 1 || ny <= 1) {
        for (int j = 0; j < ny; ++j) fn(j);
        return;
    }
    if (threads > ny) threads = ny;
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (int j = next.fetch_add(1); j < ny; j = next.fetch_add(1)) fn(j);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace defgen
