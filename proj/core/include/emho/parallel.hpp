#pragma once

#include <cstddef>
#include <functional>

namespace emho {

// Runs body(0..n-1) across hardware threads. Each index must write only its
// own slot; results are then independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace emho
