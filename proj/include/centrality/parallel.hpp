#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace centrality {

// Runs fn(thread_index, begin, end) over a static partition of [0, n).
// Partition boundaries depend only on n and the thread count, so results
// merged in thread-index order are reproducible for a fixed thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    auto t = static_cast<std::uint64_t>(threads);
    if (t > n) t = n ? n : 1;
    if (t == 1) {
        fn(0, std::uint64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::uint64_t i = 0; i < t; ++i) {
        std::uint64_t begin = n * i / t;
        std::uint64_t end = n * (i + 1) / t;
        pool.emplace_back([&fn, i, begin, end] { fn(static_cast<int>(i), begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace centrality
