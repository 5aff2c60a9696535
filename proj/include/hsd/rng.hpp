#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hsd/types.hpp"

namespace hsd {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic stream: independent generators are derived from
/// (seed, stream) so sampled checks can run in any order, on any number
/// of threads, and still draw identical values per stream index.
/// Variates are built from raw engine words, not std distributions,
/// so sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0xd1b54a32d192ed03ull * (stream + 0x632be59bd9b4e019ull));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    engine_.seed(a ^ (b << 1));
    engine_.discard(8);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Box-Muller, one value per call pair).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * kPi * u2);
    have_cached_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Complex complex_normal() { return Complex(normal(), normal()); }

  Complex unit_phase() {
    double t = uniform(0.0, 2.0 * kPi);
    return Complex(std::cos(t), std::sin(t));
  }

  /// Gaussian vector normalized to the unit sphere of C^n.
  CVector unit_vector(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v[i] = complex_normal();
    double norm = v.norm();
    while (norm < 1e-12) {
      for (int i = 0; i < n; ++i) v[i] = complex_normal();
      norm = v.norm();
    }
    return v / norm;
  }

  CVector complex_gaussian(int n, double scale = 1.0) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v[i] = scale * complex_normal();
    return v;
  }

  RVector real_gaussian(int n, double scale = 1.0) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v[i] = scale * normal();
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace hsd
