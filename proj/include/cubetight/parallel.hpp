#pragma once

#include <cstddef>
#include <functional>

namespace cubetight {

/// Worker cap: CUBETIGHT_THREADS if set and positive, else hardware concurrency.
std::size_t max_threads();

/// Runs body(begin, end) over contiguous chunks of [0, n). Exceptions thrown by
/// a chunk are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cubetight
