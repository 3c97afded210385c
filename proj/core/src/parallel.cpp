#include "gallai/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gallai {

namespace {
std::atomic<unsigned> g_thread_cap{0}; // 0 = use hardware concurrency
}

void set_thread_cap(unsigned n) { g_thread_cap.store(n); }

unsigned thread_cap() {
    unsigned cap = g_thread_cap.load();
    if (cap == 0) {
        cap = std::thread::hardware_concurrency();
        if (cap == 0) cap = 1;
    }
    return cap;
}

void parallel_chunks(size_t count, const std::function<void(size_t, size_t)>& fn) {
    unsigned workers = std::min<size_t>(thread_cap(), count);
    if (workers <= 1 || count == 0) {
        if (count > 0) fn(0, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

} // namespace gallai
