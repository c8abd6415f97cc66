#pragma once

#include <cstddef>
#include <functional>

namespace interference {

/// Worker count: the INTERFERENCE_LAB_THREADS environment variable wins,
/// then `requested` when positive, then hardware concurrency.
int resolve_threads(int requested = 0);

/// Runs fn(i) for every i in [0, count) across up to `threads` workers.
/// fn must write only to slots owned by its index; the overall result is
/// then independent of the thread count. Exceptions propagate to the caller.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace interference
