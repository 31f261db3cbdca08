#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sympose {

// Applies the requested worker count. n <= 0 keeps the hardware default.
void set_threads(int n);
int max_threads();

// SYMPOSE_THREADS overrides the CLI flag when set.
int resolve_thread_request(int cli_threads);

inline constexpr std::ptrdiff_t kReduceChunk = 1024;

// Deterministic parallel sum: the chunk grid is fixed (independent of the
// thread count), each chunk is accumulated serially, and chunks combine in
// index order.
template <class F>
double chunked_sum(std::ptrdiff_t n, F&& term) {
  if (n <= 0) return 0.0;
  const std::ptrdiff_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < nchunks; ++c) {
    const std::ptrdiff_t lo = c * kReduceChunk;
    const std::ptrdiff_t hi = std::min(n, lo + kReduceChunk);
    double s = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace sympose
