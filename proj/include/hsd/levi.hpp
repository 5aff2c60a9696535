#pragma once

#include <vector>

#include "hsd/hartogs.hpp"

namespace hsd {

/// Jet of the defining function rho = ||zeta||^2 - K(z,z)^{-s} in the
/// packed (z, zeta) coordinates. The tube block is assembled in
/// log-derivative form,
///   -d dbar K^{-s} = s K^{-s} d dbar log K - s^2 K^{-s} (d log K)(dbar log K),
/// and the fiber block is the identity.
struct DefiningJet {
  double rho;
  CVector d_rho;   // holomorphic gradient
  CMatrix levi;    // levi(i,j) = d_i dbar_j rho; quadratic form V^T levi conj(V)
};

DefiningJet defining_jet(const HartogsDomain& H, const HartogsPoint& p);

/// Orthonormal basis (columns) of the complex hyperplane annihilated by
/// d rho; throws when d rho = 0 (not a smooth point of this stratum).
CMatrix tangent_basis(const DefiningJet& jet);

struct LeviReport {
  HartogsPoint point;
  CMatrix tangent;        // tangent basis, columns
  double min_eig;         // smallest eigenvalue of the restricted Levi form
  double fd_residual;     // max relative deviation from the FD Hessian
  double closed_form_residual;  // restricted form vs the boundary identity
  bool strongly_pseudoconvex;
};

/// Certificate at a partial_0 boundary point: restricted Levi spectrum,
/// finite-difference cross-check of the assembled Hessian, and agreement
/// with the boundary identity
///   Levi(V,V) = s K^{-s} ddbar log K(X,X) +
///               (||Y||^2 ||zeta||^2 - |<Y, zeta>|^2) / ||zeta||^2.
LeviReport levi_certificate(const HartogsDomain& H, const HartogsPoint& p,
                            double tol = 1e-8);

/// Batch certification over sampled partial_0 points with per-point
/// deterministic streams; the OpenMP and serial paths agree bit for bit.
std::vector<LeviReport> levi_batch(const HartogsDomain& H, int count, std::uint64_t seed,
                                   par::Exec exec = par::Exec::Parallel,
                                   bool with_fd = true);

/// Central finite-difference mixed Hessian of rho, for cross-checks.
CMatrix levi_fd_hessian(const HartogsDomain& H, const HartogsPoint& p, double step = 1e-4);

}  // namespace hsd
