#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pointed {

/// Runs f(i) for i in [0, n) on up to `threads` workers (1 = inline, 0 = hardware).
/// The first exception thrown by any worker is rethrown on the caller's thread.
template <class F>
void parallel_for(long long n, int threads, F&& f) {
    if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (threads <= 1 || n < 2) {
        for (long long i = 0; i < n; ++i) f(i);
        return;
    }
    threads = static_cast<int>(std::min<long long>(threads, n));
    std::atomic<long long> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            for (long long i = next++; i < n; i = next++) f(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            next = n;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace pointed
