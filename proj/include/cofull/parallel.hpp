#ifndef COFULL_PARALLEL_HPP
#define COFULL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cofull {

// Worker limit for parallel_for and the sweep fan-out; n <= 0 restores
// the hardware default.
void set_worker_threads(int n);
int worker_threads();

// Runs body(0..count-1) across worker threads; rethrows the first
// exception.  Bodies must write to disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cofull

#endif
