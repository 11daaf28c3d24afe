#pragma once

#include <functional>

namespace vline {

/// Worker count for parallel loops: hardware concurrency, capped by the
/// VLINE_THREADS environment variable when set (>= 1).
int max_threads();

/// Runs fn(i) for i in [0, count). Iterations must be independent; results
/// are identical regardless of scheduling.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace vline
