#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace suitable::detail {

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any task is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

// Runs attempt(i) for i = 0, 1, ... and returns the smallest i for which it
// succeeds, or `count` if none does. Attempts above a known success are
// skipped, so the answer does not depend on the number of threads.
template <typename Attempt>
std::size_t parallel_first_success(std::size_t count, unsigned jobs, Attempt&& attempt)
{
    std::atomic<std::size_t> best{count};
    parallel_for(count, jobs, [&](std::size_t i) {
        if (i >= best.load())
            return;
        if (attempt(i)) {
            std::size_t cur = best.load();
            while (i < cur && ! best.compare_exchange_weak(cur, i)) {
            }
        }
    });
    return best.load();
}

}  // namespace suitable::detail
