#pragma once

#include <cstddef>
#include <functional>

namespace lowlight {

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// body(begin, end) on each, the first on the calling thread. threads <= 1
/// runs inline. Exceptions from any chunk are rethrown after all chunks join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Thread count from the RETINEX_THREADS environment variable, or 1.
int default_thread_count();

} // namespace lowlight
