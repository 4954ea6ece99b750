#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace heckelab {

// Thread budget: HECKELAB_THREADS if set (>=1), otherwise the hardware
// concurrency. All parallel helpers merge results by index, so the outcome
// is independent of the schedule.
inline unsigned thread_budget() {
    static unsigned cached = [] {
        if (const char* env = std::getenv("HECKELAB_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1u;
    }();
    return cached;
}

// Runs fn(i) for i in [0, n); fn must be safe to run concurrently.
template <typename Fn>
void parallel_for_index(size_t n, Fn&& fn) {
    unsigned threads = std::min<size_t>(thread_budget(), n);
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(threads);
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < threads; ++t) {
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace heckelab
