#pragma once

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace freefusion {

// Worker cap: FREEFUSION_THREADS if set (clamped to [1, 64]), else the
// hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("FREEFUSION_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return unsigned(n > 64 ? 64 : n);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 64 ? 64 : hw);
}

// Evaluates fn(i) for i in [0, n) and returns the results in index order, so
// aggregation is deterministic regardless of scheduling.  fn must not touch
// shared mutable state.  The first exception thrown by any worker is
// rethrown after all workers join.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, Fn fn) {
    std::vector<R> results(n);
    const unsigned workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += workers) results[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace freefusion
