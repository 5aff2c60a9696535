#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "hsd/types.hpp"

namespace hsd {

enum class ConeKind { HalfLine, Lorentz, PDHermitian, Product };

class Cone;
using ConePtr = std::shared_ptr<const Cone>;

/// Catalog of homogeneous convex cones: the positive half-line, the
/// Lorentz (forward light) cone in R^n, positive definite Hermitian
/// r x r matrices, and finite products of these.
///
/// Hermitian matrices are flattened row-major over the upper triangle:
/// row i contributes X(i,i), then (Re X(i,j), Im X(i,j)) for each j > i.
/// This is the wire format for every PDHermitian coordinate block.
class Cone {
 public:
  static ConePtr half_line();
  static ConePtr lorentz(int n);        // n >= 2
  static ConePtr pd_hermitian(int r);   // r >= 1, ambient dim r^2
  static ConePtr product(std::vector<ConePtr> factors);

  ConeKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }
  int lorentz_n() const { return param_; }
  int hermitian_r() const { return param_; }
  const std::vector<ConePtr>& factors() const { return factors_; }

  /// Signed distance proxy: x1 for the half-line, x1 - |x'| for Lorentz,
  /// the minimal eigenvalue for PDHermitian, the min over factors for
  /// products.
  Classification contains(const RVector& x, double tol = kDefaultTol) const;
  double defect(const RVector& x) const;
  std::string describe() const;

 private:
  Cone(ConeKind k, int ambient, int param) : kind_(k), ambient_dim_(ambient), param_(param) {}
  ConeKind kind_;
  int ambient_dim_;
  int param_ = 0;
  std::vector<ConePtr> factors_;
};

RVector flatten_hermitian(const CMatrix& X);
CMatrix unflatten_hermitian(const RVector& x, int r);
/// Basis matrix S_a of Herm(r) dual to flat coordinate a, so that
/// unflatten(e_a) = S_a and X = sum_a x_a S_a.
CMatrix hermitian_basis_matrix(int r, int a);

struct HalfLineAutParams {
  double lambda = 1.0;  // > 0
};
struct LorentzAutParams {
  double scale = 1.0;      // > 0
  double rapidity = 0.0;   // boost in the (x1, x_{boost_axis+1}) plane
  int boost_axis = 1;      // 1..n-1 (spatial index)
  double rotation = 0.0;   // rotation angle in the first spatial plane, n >= 3
};
struct PDHermitianAutParams {
  CMatrix g;  // invertible; acts by X -> g X g^*
};
struct ConeAutParams;
struct ProductAutParams {
  std::vector<ConeAutParams> factors;
};
struct ConeAutParams {
  std::variant<HalfLineAutParams, LorentzAutParams, PDHermitianAutParams, ProductAutParams> v;
};

/// A member of the linear automorphism group G(V), as a real matrix on
/// the flattened cone coordinates.
RMatrix cone_linear_aut(const Cone& cone, const ConeAutParams& params);

/// A in G(V) with A x = y for interior points x, y: scaling on the
/// half-line, boost-scaling on Lorentz, square-root congruence on
/// PDHermitian, factor-wise on products.
RMatrix cone_transitive_map(const Cone& cone, const RVector& x, const RVector& y,
                            double tol = kDefaultTol);

}  // namespace hsd
