#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace qwalk {

// Worker count from QWALK_THREADS: unset, empty, or 0 means
// std::thread::hardware_concurrency().
std::size_t worker_count();

// Calls fn(i) for i in [0, count) across worker_count() threads in contiguous
// chunks. The first exception thrown by any call is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qwalk
