#pragma once

#include <cstddef>
#include <functional>

namespace qkac {

/// Worker count: QKAC_THREADS if set and positive, else the hardware count.
unsigned worker_count();

/// Runs body(k) for k in [0, n) on up to worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qkac
