#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bcert::util {

// Worker-pool width: explicit request > BCERT_THREADS env var > hardware.
inline int resolve_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BCERT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-parallel loop over [0, count) with results written to caller-owned
// slots; deterministic because work is addressed by index, not by arrival
// order.  Exceptions from tasks are captured and the first one rethrown.
template <class F>
void parallel_for(long count, int threads, F&& fn) {
    threads = resolve_thread_count(threads);
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    int width = static_cast<int>(std::min<long>(threads, count));
    pool.reserve(static_cast<size_t>(width));
    for (int w = 0; w < width; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace bcert::util
