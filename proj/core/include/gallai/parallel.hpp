#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace gallai {

// Global worker cap. Enumeration kernels and Monte-Carlo loops never let the
// thread count influence results: work is split into fixed blocks and merged
// in block order.
void set_thread_cap(unsigned n);
unsigned thread_cap();

// Runs fn(begin, end) over [0, count) split into contiguous chunks, one chunk
// per worker. fn must only touch state owned by its chunk.
void parallel_chunks(size_t count, const std::function<void(size_t, size_t)>& fn);

} // namespace gallai
