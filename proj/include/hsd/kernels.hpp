#pragma once

#include <vector>

#include "hsd/domain.hpp"

namespace hsd {

/// Factor functions of the closed-form kernels, holomorphic in the first
/// argument and antiholomorphic in the second:
///   TubeLinear   (w - conj(w'))/(2i), one tube coordinate
///   BallPairing  (w - conj(w'))/(2i) - <u,u'>
///   UnitPairing  1 - <z,z'>  (bounded disc/ball realizations)
///   LorentzForm  q((w - conj(w'))/(2i)), q the Lorentz quadratic
///   MatrixDet    det((W - W'^*)/(2i)) on flattened Hermitian coordinates
enum class FactorTag { TubeLinear, BallPairing, UnitPairing, LorentzForm, MatrixDet };

struct KernelFactor {
  FactorTag tag;
  std::vector<int> idx;  // domain coordinates the factor reads, in factor order
  double exponent;       // negative for every catalog kernel
  int mat_r = 0;         // MatrixDet only
};

/// One irreducible catalog block: constant * prod factor^exponent.
struct KernelLeaf {
  double constant;
  std::vector<KernelFactor> factors;
  double exponent_sum() const;  // the multi-index total, recorded not enforced
};

/// Product structure is kept as a tree so that the kernel of a product
/// domain is evaluated as the product of the factor evaluations, with
/// the same floating-point expression tree.
struct KernelTree {
  bool is_leaf = true;
  KernelLeaf leaf;
  std::vector<KernelTree> children;
};

class KernelModel {
 public:
  explicit KernelModel(const Domain& D);

  int dim() const { return dim_; }
  const KernelTree& tree() const { return tree_; }

  /// K(p, q) with principal powers. Throws EvaluationError if a factor
  /// lands on the branch cut of a non-integer power or vanishes.
  Complex eval(const CVector& p, const CVector& q) const;
  /// log K(p, q) as the sum of factor logs; smooth wherever factors
  /// avoid the cut, which makes it safe to difference numerically.
  Complex log_eval(const CVector& p, const CVector& q) const;
  /// K(p, q)^power computed factor-wise (never as a power of the product).
  Complex pow_eval(const CVector& p, const CVector& q, double power) const;

  CVector log_gradient_p(const CVector& p, const CVector& q) const;
  CVector log_gradient_qbar(const CVector& p, const CVector& q) const;
  /// Mixed Hessian d^2 log K / dp_i dqbar_j.
  CMatrix mixed_log_hessian(const CVector& p, const CVector& q) const;

 private:
  int dim_;
  KernelTree tree_;
};

struct KernelJet {
  double value;  // K(p, p), positive on the interior
  CVector grad;  // d log K at the diagonal
  CMatrix hess;  // d dbar log K at the diagonal (Bergman metric matrix)
};

Complex kernel_eval(const Domain& D, const CVector& p, const CVector& q);
KernelJet kernel_jet(const Domain& D, const CVector& p);
/// det of the mixed log-Hessian at (p, q); the nonvanishing quantity in
/// the boundary-extension hypothesis.
Complex tumanov_r(const Domain& D, const CVector& p, const CVector& q);

/// Weighted-to-unweighted kernel ratio gamma_D(c): the reproducing kernel
/// of the weight K^{-c} equals gamma_D(c) K^{c+1}. A polynomial in c of
/// degree dim(D) for every catalog domain; biholomorphically invariant.
double gamma_weight_ratio(const Domain& D, double c);

/// Closed-form kernel constants of the tube catalog.
double lorentz_tube_constant(int n);
double hermitian_tube_constant(int r);

/// Splits a Siegel domain over a product cone into its blocks, assigning
/// fiber coordinates by the support of the form. When given,
/// fiber_indices receives each block's fiber coordinates in the frame of
/// the parent domain.
std::vector<SiegelDomain> split_siegel(const SiegelDomain& D,
                                       std::vector<std::vector<int>>* fiber_indices = nullptr);

}  // namespace hsd
