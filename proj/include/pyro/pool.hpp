#pragma once

#include <cstdint>
#include <functional>

namespace pyro {

/// --workers default: PYRO_WORKERS env var, else hardware concurrency, min 1
int default_workers();

/// Runs body(0..count-1) on `workers` threads. Each index is executed exactly
/// once; callers store results into index-addressed slots, so outputs never
/// depend on the worker count or schedule. Exceptions are rethrown on the
/// calling thread.
void parallel_for(std::int64_t count, int workers,
                  const std::function<void(std::int64_t)>& body);

}  // namespace pyro
