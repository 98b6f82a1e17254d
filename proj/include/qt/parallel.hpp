#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qt {

/// Worker count for parallel sections: QT_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs body(worker, index) for every index in [0, count), strided across at most
/// thread_count() workers. The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, count));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < count; ++idx) body(0, idx);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t idx = w; idx < count; idx += workers) body(w, idx);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace qt
