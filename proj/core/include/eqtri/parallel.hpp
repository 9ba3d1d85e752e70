#pragma once

#include <cstddef>
#include <functional>

namespace eqtri {

// Upper bound on worker threads used by the builders (0 restores the default,
// the hardware concurrency).
void set_thread_limit(unsigned limit);
unsigned thread_limit();

// Runs fn(i) for i in [0, count) on up to thread_limit() threads; calls made
// from inside a worker run serially.  The first exception thrown by a task is
// rethrown once all workers have stopped.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace eqtri
