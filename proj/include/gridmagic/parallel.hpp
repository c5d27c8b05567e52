#pragma once

#include "gridmagic/config.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gridmagic {

// Runs fn(i) for i in [0, count) on up to effective_threads() workers.
// Results must be written to per-index slots by the caller; exact integer
// work is order-independent, so this keeps outputs deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int nthreads = effective_threads();
    if (nthreads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mx;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mx);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t width = std::min<std::size_t>(count, static_cast<std::size_t>(nthreads));
    pool.reserve(width);
    for (std::size_t k = 0; k < width; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gridmagic
