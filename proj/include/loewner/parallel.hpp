#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace loewner {

// Worker count: hardware concurrency capped by ANNLOEWNER_THREADS (if set).
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ANNLOEWNER_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Runs fn(i) for i in [0, n) on a block partition.  fn must be safe to call
// concurrently for distinct i.  The first exception thrown by any block is
// rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), n ? n : 1);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run_block = [&](std::size_t lo, std::size_t hi) {
        try {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    if (workers <= 1) {
        run_block(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t block = (n + workers - 1) / workers;
        for (std::size_t w = 1; w < workers; ++w) {
            const std::size_t lo = w * block, hi = std::min(n, lo + block);
            if (lo >= hi) break;
            pool.emplace_back(run_block, lo, hi);
        }
        run_block(0, std::min(n, block));
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace loewner
