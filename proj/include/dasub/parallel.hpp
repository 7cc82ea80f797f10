#pragma once

#include <cstddef>
#include <functional>

namespace dasub {

/// Worker count: DASUB_THREADS when set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; results
/// must be written to per-index slots so the outcome is order independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dasub
