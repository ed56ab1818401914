#ifndef XHO_PARALLEL_HPP
#define XHO_PARALLEL_HPP

#include <cstdint>
#include <memory>
#include <type_traits>

namespace xho::par {

// Global switch for the OpenMP kernels. Defaults to on when compiled with
// OpenMP and more than one thread is available; the serial reference paths
// stay in the build and are exercised directly by the tests and benchmark.
bool enabled();
void set_enabled(bool on);
int max_threads();

namespace detail {
void run_indexed(std::int64_t n, void* ctx, void (*fn)(void*, std::int64_t));
}

// Parallel loop over [0, n). The body must only write to disjoint,
// index-addressed slots so results are identical to the serial order.
template <class F>
void for_index(std::int64_t n, F&& f) {
  using Fn = std::remove_reference_t<F>;
  detail::run_indexed(n, std::addressof(f), [](void* ctx, std::int64_t i) {
    (*static_cast<Fn*>(ctx))(i);
  });
}

}  // namespace xho::par

#endif  // XHO_PARALLEL_HPP
