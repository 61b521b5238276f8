#pragma once

#include <cstddef>
#include <functional>

namespace bent {

// Worker count for the exhaustive searches. Resolution order: the last
// set_thread_count() call, then $BENT_THREADS, then hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(i) for every i in [0, count), distributing indices dynamically
// over thread_count() workers. The first exception thrown by any body is
// rethrown on the caller after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bent
