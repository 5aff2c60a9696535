#pragma once

#include <vector>

#include "hsd/cones.hpp"
#include "hsd/types.hpp"

namespace hsd {

/// V-Hermitian form F: C^m x C^m -> C^n given by component matrices,
/// F_j(u, v) = v^* H_j u with every H_j Hermitian. m = 0 is the empty
/// form of a tube domain.
struct HermitianForm {
  int n = 0;
  int m = 0;
  std::vector<CMatrix> H;  // n matrices, each m x m

  static HermitianForm empty(int n);
  static HermitianForm ball(int m);  // n = 1, F(u,v) = <u,v>

  CVector eval(const CVector& u, const CVector& v) const;  // C-linear in u
  RVector eval_diag(const CVector& u) const;               // F(u,u), real
  void validate() const;
};

/// Siegel domain of type II over the cone V:
/// D(V,F) = { (w,u) : Im w - F(u,u) in V }.
struct SiegelDomain {
  ConePtr cone;
  HermitianForm form;
  int n = 0;  // tube dimension
  int m = 0;  // fiber dimension
};

struct SiegelPoint {
  CVector w;
  CVector u;
};

SiegelDomain make_half_plane();
SiegelDomain make_siegel_ball(int m);
SiegelDomain make_tube_over(ConePtr cone);
SiegelDomain make_siegel_product(const SiegelDomain& a, const SiegelDomain& b);

RVector siegel_defect(const SiegelDomain& D, const SiegelPoint& p);
Classification siegel_contains(const SiegelDomain& D, const SiegelPoint& p,
                               double tol = kDefaultTol);

struct ShilovResult {
  bool on_shilov;
  double residual;  // || Im w - F(u,u) ||
};
ShilovResult shilov_membership(const SiegelDomain& D, const SiegelPoint& p,
                               double tol = kDefaultTol);

/// Flattened coordinates: the first n entries are w, the remaining m are u.
CVector pack_siegel(const SiegelPoint& p);
SiegelPoint unpack_siegel(const SiegelDomain& D, const CVector& z);

}  // namespace hsd
