#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace symprod {

/// Worker count from SYMPROD_THREADS, else the hardware concurrency.
inline int default_threads()
{
    if (const char* env = std::getenv("SYMPROD_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers.
/// Chunks are claimed dynamically; callers must write results per chunk and
/// merge them in chunk order so the outcome does not depend on scheduling.
template <typename Body>
void parallel_chunks(std::size_t chunks, int threads, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1, threads), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= chunks) return;
                try {
                    body(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(chunks);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace symprod
