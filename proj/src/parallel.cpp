#include "hsd/parallel.hpp"

namespace hsd::par {

int& thread_setting() {
  static int n = 0;
  return n;
}

void set_threads(int n) { thread_setting() = n < 0 ? 0 : n; }

int effective_threads() {
#ifdef _OPENMP
  int n = thread_setting();
  return n > 0 ? n : omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hsd::par
