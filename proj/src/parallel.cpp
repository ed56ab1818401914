#include "xho/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xho::par {

namespace {
std::atomic<bool> g_enabled{true};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool enabled() { return g_enabled.load() && max_threads() > 1; }

void set_enabled(bool on) { g_enabled.store(on); }

namespace detail {

void run_indexed(std::int64_t n, void* ctx, void (*fn)(void*, std::int64_t)) {
  if (!enabled() || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
#else
  for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
#endif
}

}  // namespace detail

}  // namespace xho::par
