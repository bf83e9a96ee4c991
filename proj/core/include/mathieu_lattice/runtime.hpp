#pragma once

#include <cstddef>
#include <functional>

namespace mathieu_lattice {

// Worker-thread count for internally parallel loops.  Controlled by the
// MATHIEU_LATTICE_THREADS environment variable; 0 or unset picks the
// hardware concurrency.
unsigned thread_budget();

// Runs fn(i) for every i in [0, count).  Iterations must be independent and
// write only to disjoint slots, which keeps results identical for any thread
// count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mathieu_lattice
