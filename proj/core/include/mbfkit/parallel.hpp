#pragma once

#include <cstddef>
#include <functional>

namespace mbfkit {

/// Worker count parallel_for will use: explicit override if set, else the
/// MBFKIT_THREADS environment variable, else hardware concurrency.
int effective_threads();

/// Caps the worker count for the whole process; 0 restores auto selection.
void set_thread_override(int threads);

namespace detail {
void parallel_for_blocks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& block);
}

/// Runs f(i) for every i in [0, n) on contiguous index blocks. f must only
/// write state owned by index i; results are then identical for every thread
/// count. Exceptions thrown by f are rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  detail::parallel_for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) f(i);
  });
}

}  // namespace mbfkit
