#ifndef RVCLAB_PARALLEL_HPP_
#define RVCLAB_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace rvclab {

// Worker count from RVCLAB_THREADS, else the hardware concurrency (>= 1).
int configured_threads();

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out dynamically; body must only write to per-index state.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace rvclab

#endif  // RVCLAB_PARALLEL_HPP_
