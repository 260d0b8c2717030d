#ifndef ELLIPTIKA_PARALLEL_HPP
#define ELLIPTIKA_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "elliptika/common.hpp"

namespace elliptika {

// --threads flag > ELLIPTIKA_THREADS > 1. Sweeps are deterministic regardless
// of the thread count: tasks write into preallocated slots, nothing is
// accumulated across threads.
inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ELLIPTIKA_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

template <typename F>
void parallel_for(std::size_t count, int threads, F&& fn) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count ? count : 1)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mtx;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace elliptika

#endif
