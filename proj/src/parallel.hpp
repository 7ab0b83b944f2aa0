#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mbc::detail {

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(task, worker) for task in [0, count) on up to `jobs` threads.
/// Tasks are claimed dynamically; worker ids are in [0, workers). The first
/// exception thrown by any task is rethrown after all threads join.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t t = 0; t < count; ++t) body(t, 0U);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](unsigned worker) {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::size_t t = next.fetch_add(1);
            if (t >= count) return;
            try {
                body(t, worker);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop = true;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Number of workers parallel_for will use for `count` tasks.
inline unsigned worker_count(std::size_t count, unsigned jobs) {
    return static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
}

}  // namespace mbc::detail
