#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tav {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out in increasing order; the first exception is rethrown.
template <class Fn>
void parallel_for(size_t count, unsigned threads, Fn&& fn)
{
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err)
                    err = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = static_cast<unsigned>(std::min<size_t>(threads, count));
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace tav
