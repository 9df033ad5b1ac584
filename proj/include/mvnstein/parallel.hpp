#pragma once

#include <cstdint>
#include <functional>

namespace mvnstein {

// Resolve the worker pool size: an explicit request wins, then the
// MVNSTEIN_WORKERS environment variable, then machine parallelism.
int effective_workers(int requested = 0);

// Run fn(i) for i in [0, count) across the pool. Each index is processed by
// exactly one worker; callers make the body write only to slot i of
// preallocated storage, so the outcome is independent of the worker count.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  int workers = 0);

}  // namespace mvnstein
