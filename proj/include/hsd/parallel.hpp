#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsd::par {

enum class Exec { Serial, Parallel };

/// 0 means "use the OpenMP default".
int& thread_setting();
void set_threads(int n);
int effective_threads();

inline constexpr std::size_t kDefaultBlock = 4096;

/// Runs body(block_index, begin, end) over a fixed partition of [0, n)
/// and collects one partial result per block. The partition depends only
/// on (n, block), never on the thread count, and the caller reduces the
/// partials in block order, so results are bit-identical for any number
/// of threads. Exec::Serial runs the same blocked loop without OpenMP;
/// it is the reference path the tests and the benchmark compare against.
template <class T, class Body>
std::vector<T> blocked_partials(std::size_t n, std::size_t block, Body&& body,
                                Exec exec = Exec::Parallel) {
  if (block == 0) block = 1;
  const std::size_t nblocks = n == 0 ? 0 : (n + block - 1) / block;
  std::vector<T> out(nblocks);
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    const int nt = effective_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * block;
      const std::size_t hi = lo + block < n ? lo + block : n;
      out[static_cast<std::size_t>(b)] =
          body(static_cast<std::size_t>(b), lo, hi);
    }
    return out;
  }
#else
  (void)exec;
#endif
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = b * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    out[b] = body(b, lo, hi);
  }
  return out;
}

/// Ordered pairwise reduction of the block partials. Fixed order keeps
/// sums bit-stable; pairwise keeps rounding growth logarithmic.
template <class T>
T pairwise_reduce(std::vector<T> v, T zero) {
  if (v.empty()) return zero;
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) v[i] = v[i] + v[i + half];
    n = half;
  }
  return v[0];
}

}  // namespace hsd::par
