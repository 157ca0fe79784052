#ifndef DUNKL_PARALLEL_HPP
#define DUNKL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace dunkl {

/// Worker count: DUNKL_LAB_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
int default_thread_count();

/**
 * Calls body(i) for i in [0, n) on up to `threads` workers. Each index runs
 * exactly once; results written by index are therefore independent of the
 * schedule. The first exception thrown by any body is rethrown here.
 */
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace dunkl

#endif  // DUNKL_PARALLEL_HPP
