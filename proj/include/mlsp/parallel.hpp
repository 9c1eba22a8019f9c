#pragma once

#include <cstddef>
#include <functional>

namespace mlsp {

/// Runs body(i) for i in [0, n) on up to `jobs` threads (0 = hardware
/// concurrency). Work is handed out one index at a time. The first exception
/// thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace mlsp
