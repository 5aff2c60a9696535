#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsd/automorphisms.hpp"
#include "hsd/hartogs.hpp"
#include "hsd/levi.hpp"

namespace hsd {

struct CheckResult {
  std::string name;
  double residual = 0.0;  // max deviation observed
  double tol = 0.0;
  bool pass = false;
  bool statistical = false;
  double estimate = 0.0;  // statistical checks: estimate, stderr, target
  double se = 0.0;
  double target = 0.0;
};

struct SuiteConfig {
  std::string suite;
  std::string domain_json;  // optional; suites have their own catalogs
  long samples = 0;         // 0 = suite default
  std::uint64_t seed = 20240901;
  double tol = 0.0;         // 0 = per-check defaults
  int truncation = 200;
  par::Exec exec = par::Exec::Parallel;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CheckResult> checks;
  double wall_ms = 0.0;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const SuiteConfig& config);

/// Monte Carlo reproducing-property estimate of
///   integral over D of q^alpha K(p, q) dV(q)  (target: p^alpha)
/// by rejection sampling from the bounding box of a bounded realization.
/// Per-block generator streams and a fixed pairwise reduction keep the
/// result bit-identical for any thread count.
struct McResult {
  Complex estimate;
  double se_re = 0.0;
  double se_im = 0.0;
  Complex target;
  long samples = 0;
};

McResult mc_reproducing(const DomainPtr& D, const std::vector<int>& monomial,
                        const CVector& p, long samples, std::uint64_t seed,
                        par::Exec exec = par::Exec::Parallel);
McResult mc_reproducing_hartogs(const HartogsDomain& H, const std::vector<int>& monomial,
                                const HartogsPoint& p, long samples, std::uint64_t seed,
                                par::Exec exec = par::Exec::Parallel);

/// Monte Carlo checks of the closed-form tube kernel constants:
/// importance-sampled normalization for the Lorentz tube, bounded-volume
/// identity for the Hermitian tube.
struct CalibrationResult {
  double estimate = 0.0;
  double se = 0.0;
  double reference = 0.0;
  long samples = 0;
};
CalibrationResult calibrate_lorentz_constant(int n, long samples, std::uint64_t seed,
                                             par::Exec exec = par::Exec::Parallel);
CalibrationResult calibrate_hermitian_constant(int r, long samples, std::uint64_t seed,
                                               par::Exec exec = par::Exec::Parallel);

}  // namespace hsd
