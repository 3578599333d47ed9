#pragma once

#include <cstddef>
#include <functional>

namespace umato {

/// Number of worker threads to use when the caller passes 0: the value of
/// the UMATO_THREADS environment variable if set, otherwise 1.
std::size_t default_threads();

/// Runs `body(begin, end)` over contiguous chunks of [0, n) on up to
/// `threads` threads (0 selects `default_threads()`). Chunks are disjoint;
/// callers write per-row results into preallocated slots so the output does
/// not depend on the thread count.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

} // namespace umato
