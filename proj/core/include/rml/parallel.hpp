#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rml {

/// Thread count used when an operation is not given one explicitly:
/// set_default_threads() if called, else $RML_THREADS, else hardware concurrency.
int default_threads();
void set_default_threads(int threads);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// claimed dynamically; callers write results into per-index slots so the
/// reduction order never depends on the schedule.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body)
{
    if (threads <= 0)
        threads = default_threads();
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
                body(i);
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure)
                failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace rml
