#pragma once

#include <memory>

#include "hsd/euler.hpp"
#include "hsd/kernels.hpp"
#include "hsd/parallel.hpp"

namespace hsd {

/// D_{N,s} = { (z, zeta) in D x C^N : ||zeta||^2 < K_D(z,z)^{-s} }.
/// s > 0 is accepted; the automorphism statements assume s >= 1, the
/// boundary geometry holds for every positive s.
struct HartogsDomain {
  DomainPtr base;
  int N = 1;
  double s = 1.0;
};

struct HartogsPoint {
  CVector z;
  CVector zeta;
};

HartogsDomain make_hartogs(DomainPtr base, int N, double s);

enum class HartogsRegion { Interior, Boundary0, BoundaryBase, Exterior };

struct HartogsClass {
  HartogsRegion status;
  double h = 0.0;     // ||zeta||^2 K(z,z)^s where defined
  bool h_defined = false;
};

/// The invariant h(z, zeta) = ||zeta||^2 K(z,z)^s; membership reads
/// h < 1 instead of ||zeta||^2 < K^{-s}, which stays conditioned near
/// the base boundary. Requires z interior.
double h_value(const HartogsDomain& H, const HartogsPoint& p);
HartogsClass hartogs_contains(const HartogsDomain& H, const HartogsPoint& p,
                              double tol = kDefaultTol);

/// The kernel of D_{N,s} in operator form:
///   (N!/pi^N) K(z,z')^{sN+1} b(t d/dt + N)[(1-t)^{-(N+1)}],
///   t = K(z,z')^s <zeta, zeta'>,
/// where b(x) = gamma_D(s x) is the weighted-kernel polynomial of the
/// base. The polynomial is recovered by exact interpolation of gamma at
/// the integer arguments the operator actually uses and verified at
/// extra nodes; instantiation fails loudly if no polynomial of degree
/// dim(D) fits.
class HartogsKernel {
 public:
  explicit HartogsKernel(const HartogsDomain& H);

  const HartogsDomain& domain() const { return H_; }
  const Polynomial& b_polynomial() const { return b_; }
  const EulerRational& rational() const { return R_; }
  double prefactor_exponent() const { return H_.s * H_.N + 1.0; }
  int pole_order() const { return H_.N + 1; }

  /// Throws EvaluationError when |t| >= 1 (outside the convergence
  /// region; the pair is not in the domain of the closed form).
  Complex eval(const CVector& p, const CVector& q) const;
  Complex eval(const HartogsPoint& p, const HartogsPoint& q) const;

  /// Mixed log-Hessian of the Hartogs kernel at (p, q), blocks in the
  /// packed (z, zeta) coordinates; its determinant is the Tumanov R'.
  CMatrix mixed_log_hessian(const HartogsPoint& p, const HartogsPoint& q) const;
  Complex tumanov_r(const HartogsPoint& p, const HartogsPoint& q) const;

  const KernelModel& base_model() const { return base_; }

 private:
  HartogsDomain H_;
  KernelModel base_;
  Polynomial b_;
  EulerRational R_;
};

struct SeriesResult {
  Complex value;
  double tail_bound;   // conservative bound on the truncation error
  bool converged;      // tail ratio < 1 at the truncation edge
};

/// Orthonormal-monomial series oracle for disc and ball bases: monomial
/// norms are exact Beta-type integrals over D_{N,s}, summed with fixed
/// block order so the result is independent of the thread count.
SeriesResult hartogs_kernel_series(const HartogsDomain& H, const HartogsPoint& p,
                                   const HartogsPoint& q, int truncation = 200,
                                   par::Exec exec = par::Exec::Serial);

CVector pack_hartogs(const HartogsPoint& p);
HartogsPoint unpack_hartogs(const HartogsDomain& H, const CVector& v);

/// Interior sample with fiber radius fraction in [0, rho_max).
HartogsPoint sample_hartogs_interior(const HartogsDomain& H, Rng& rng, double rho_max = 0.9);
/// Point of the smooth stratum partial_0: ||zeta||^2 = K(z,z)^{-s}.
HartogsPoint sample_hartogs_boundary0(const HartogsDomain& H, Rng& rng);
/// Point of the other stratum: (z, 0) with z on the base boundary.
HartogsPoint sample_hartogs_boundary_base(const HartogsDomain& H, Rng& rng);

}  // namespace hsd
