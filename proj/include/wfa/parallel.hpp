#pragma once

/// @file parallel.hpp
/// @brief Fan-out of independent tasks over a bounded number of threads.

#include <cstddef>
#include <functional>

namespace wfa {

/// Calls fn(i) for every i in [0, n) on up to `jobs` threads. Tasks must
/// write only to their own slot of any shared output. The first exception
/// thrown by a task is rethrown after all threads finish.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Worker count from the WFA_GA_JOBS environment variable, else 1.
unsigned default_jobs();

} // namespace wfa
