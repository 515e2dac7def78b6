// Minimal deterministic work distribution: jobs are claimed from a shared
// counter, each job returns a result vector, and callers merge the per-job
// vectors in job order.  That way thread scheduling can never change the
// merged output, only the wall time.

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace lp3 {

inline unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(0), ..., fn(jobs - 1) on `threads` threads (0 means the hardware
// default) and returns the per-job results indexed by job number.
template <typename T, typename Fn>
std::vector<std::vector<T>> parallel_collect(std::size_t jobs, unsigned threads, Fn fn) {
    std::vector<std::vector<T>> out(jobs);
    if (jobs == 0) return out;
    if (threads == 0) threads = default_thread_count();
    if (threads > jobs) threads = static_cast<unsigned>(jobs);
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs) return;
                out[i] = fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace lp3
