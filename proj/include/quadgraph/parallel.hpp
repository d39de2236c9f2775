#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace quadgraph {

/// Split [begin, end) into contiguous chunks and run fn(chunk_begin,
/// chunk_end) on worker threads. Used only for computations whose result is
/// independent of the partitioning (per-row adjacency tests, row sums, ...).
/// The first exception thrown by a worker is rethrown on the calling thread.
inline void parallel_for_chunks(size_t begin, size_t end,
                                const std::function<void(size_t, size_t)>& fn,
                                unsigned threads = 0) {
    const size_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = unsigned(std::min<size_t>(threads, total));
    if (threads <= 1) {
        fn(begin, end);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    auto guarded = [&](size_t lo, size_t hi) {
        try {
            fn(lo, hi);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    const size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        size_t lo = begin + size_t(t) * chunk;
        size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(guarded, lo, hi);
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace quadgraph
