#include "sympose/threading.hpp"

#include <cstdlib>
#include <string>

namespace sympose {

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int resolve_thread_request(int cli_threads) {
  if (const char* env = std::getenv("SYMPOSE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
      // malformed value falls through to the CLI request
    }
  }
  return cli_threads;
}

}  // namespace sympose
