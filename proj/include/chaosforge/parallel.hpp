#pragma once

#include <cstdint>
#include <functional>

namespace chaosforge {

// Worker cap from CHAOSFORGE_THREADS; absent or invalid means 1 (single
// threaded). Read at call time, clamped to [1, 64].
int worker_count();

// Runs fn(i) for i in [0, count). Work items are pulled from a shared
// counter by up to worker_count() threads; callers must write results into
// per-index slots so the output is identical for any worker count.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace chaosforge
