#include "mbfkit/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mbfkit {

namespace {
std::atomic<int> g_override{0};

int env_threads() {
  const char* s = std::getenv("MBFKIT_THREADS");
  if (!s) return 0;
  int v = std::atoi(s);
  return v > 0 ? v : 0;
}
}  // namespace

int effective_threads() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o > 0) return o;
  int e = env_threads();
  if (e > 0) return e;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void set_thread_override(int threads) {
  g_override.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

namespace detail {

void parallel_for_blocks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& block) {
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(effective_threads());
  // Small ranges are not worth the thread spawn.
  if (workers <= 1 || n < 64) {
    block(0, n);
    return;
  }
  if (workers > n) workers = n;

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&](std::size_t lo, std::size_t hi) {
    try {
      block(lo, hi);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  std::size_t chunk = (n + workers - 1) / workers;
  std::size_t lo = chunk;  // first chunk runs on this thread
  for (std::size_t w = 1; w < workers && lo < n; ++w, lo += chunk) {
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    pool.emplace_back(run, lo, hi);
  }
  run(0, chunk < n ? chunk : n);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

}  // namespace mbfkit
