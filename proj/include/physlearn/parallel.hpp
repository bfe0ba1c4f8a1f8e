#pragma once

#include <cstddef>
#include <functional>

namespace physlearn {

/// Number of worker threads: PHYSLEARN_THREADS if set, else the hardware
/// concurrency.
[[nodiscard]] unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index must touch only its own output
/// slot; results are then bit-identical for any thread count, including 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace physlearn
