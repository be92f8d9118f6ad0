#pragma once

#include <cstddef>
#include <functional>

namespace cyclohodge {

// Runs fn(i) for i in [0, count). With jobs > 1, tasks are claimed from an
// atomic counter by a fixed-size thread pool; callers must make fn(i) write
// only to slot i so results are index-deterministic. The first exception is
// rethrown after all workers join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace cyclohodge
