#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hsd/domain.hpp"
#include "hsd/hartogs.hpp"
#include "hsd/kernels.hpp"

namespace hsd {

/// phi(z) = e^{i theta} (z - a) / (1 - conj(a) z) on the unit disc.
struct MobiusParams {
  Complex a;
  double theta = 0.0;
};

enum class CayleyKind {
  DiscToHalfPlane,    // z -> i(1+z)/(1-z)
  HalfPlaneToDisc,    // w -> (w-i)/(w+i)
  BallToSiegelBall,   // B^m -> S_{m-1}
  SiegelBallToBall,
};

/// Affine map between Siegel domains:
///   u -> B u + c,  w -> A w + a + 2i F'(B u, c) + i F'(c, c)
/// with A V = V' and A F(u,v) = F'(Bu, Bv). The defect transforms by A,
/// so membership, boundary strata and the Shilov set are preserved.
struct AffineSiegelParams {
  RMatrix A;
  CMatrix B;
  RVector a;
  CVector c;
};

class BaseMap;
using BaseMapPtr = std::shared_ptr<const BaseMap>;

/// A catalog biholomorphism between domain handles, with its holomorphic
/// Jacobian determinant and a fixed cut-free branch of J^s. Chains keep
/// the factored branch (J phi)^s (J psi . phi)^s; the canonical form of
/// a chain, when one exists, carries its own principal branch, and the
/// two differ by a constant fiber phase e^{2 pi i s k}.
class BaseMap {
 public:
  enum class Kind { Identity, Mobius, Cayley, AffineSiegel, ProductMap, Chain };

  static BaseMapPtr identity(DomainPtr D);
  static BaseMapPtr mobius(MobiusParams p);
  static BaseMapPtr cayley(CayleyKind kind, int ball_m = 1);
  static BaseMapPtr affine_siegel(DomainPtr src, DomainPtr dst, AffineSiegelParams p);
  static BaseMapPtr product_map(std::vector<BaseMapPtr> parts);
  static BaseMapPtr chain(std::vector<BaseMapPtr> parts);  // applied left to right

  Kind kind() const { return kind_; }
  const DomainPtr& src() const { return src_; }
  const DomainPtr& dst() const { return dst_; }
  const MobiusParams& mobius_params() const { return mob_; }
  const AffineSiegelParams& affine_params() const { return aff_; }
  CayleyKind cayley_kind() const { return cay_; }
  int cayley_m() const { return cayley_m_; }
  const std::vector<BaseMapPtr>& parts() const { return parts_; }

  CVector apply(const CVector& z) const;
  Complex jacobian(const CVector& z) const;
  /// The recorded branch of (J(z))^s; |result| = |J|^s always.
  Complex jacobian_power(const CVector& z, double s) const;
  BaseMapPtr inverse() const;

 private:
  BaseMap() = default;
  Kind kind_ = Kind::Identity;
  DomainPtr src_, dst_;
  MobiusParams mob_;
  CayleyKind cay_ = CayleyKind::DiscToHalfPlane;
  int cayley_m_ = 1;
  AffineSiegelParams aff_;
  std::vector<BaseMapPtr> parts_;
};

/// Composition phi then psi.
BaseMapPtr compose_base(const BaseMapPtr& phi, const BaseMapPtr& psi);
/// Closed single-map form of a chain when the catalog has one
/// (Mobius compositions, affine compositions); nullptr otherwise.
BaseMapPtr canonical_form(const BaseMapPtr& map);
/// A reference interior point of the base domain, used to measure
/// constant branch phases.
CVector base_point(const Domain& D);

/// (z, zeta) -> (phi(z), U(zeta) (J phi(z))^s).
struct InducedAut {
  BaseMapPtr phi;
  CMatrix U;
  double s = 1.0;
};

InducedAut induced_from(BaseMapPtr phi, CMatrix U, double s);
/// Realization change (sigma(z), (J sigma(z))^s zeta) for a base
/// biholomorphism sigma; the induced map with trivial U.
InducedAut realization_change(BaseMapPtr sigma, int N, double s);

HartogsPoint apply(const InducedAut& map, const HartogsPoint& p);

struct ComposeResult {
  InducedAut map;             // canonical base and folded U when possible
  double phase_defect;        // angle of the folded constant, exactly 0 for integer s
  int branch_index;           // the integer k in e^{2 pi i s k}
};

/// Psi after Phi. The mechanical composition carries the factored branch;
/// when the base chain has a canonical single-map form the constant
/// phase between the two branches is measured, snapped to e^{2 pi i s k},
/// and folded into U, keeping the result exactly of induced form.
ComposeResult compose(const InducedAut& Psi, const InducedAut& Phi);
InducedAut inverse(const InducedAut& Phi);

/// Affine self-map of a homogeneous Siegel domain taking p to q, built
/// from fiber translation, real translation and a cone map.
BaseMapPtr transitive_base_map(const DomainPtr& D, const SiegelPoint& p, const SiegelPoint& q);

struct JacobianBlockReport {
  CMatrix full;               // numerical holomorphic Jacobian at p0
  double f2_z_norm;           // norm of the d f2 / d z block (should vanish)
  double f2_zeta_unitary_defect;  // || C C^* - I || for C = d f2 / d zeta
  double fd_consistency;      // max discrepancy between the two FD step sizes
};

/// Numerically differentiates an induced map fixing p0 = (z0, 0) and
/// reports the block structure (identity-ish base block, vanishing
/// d f2/d z, unitary d f2/d zeta).
JacobianBlockReport jacobian_block(const InducedAut& map, const HartogsPoint& p0);

/// | K_{D'}(phi p, phi q) J phi(p) conj(J phi(q)) - K_D(p, q) |.
double transformation_residual(const Domain& D, const Domain& Dprime, const BaseMap& phi,
                               const CVector& p, const CVector& q);

/// Haar-ish random unitary via QR with phase normalization.
CMatrix random_unitary(int n, Rng& rng);
/// Random parameters for cone_linear_aut, per cone variant.
ConeAutParams sample_cone_aut_params(const Cone& V, Rng& rng);
/// Random catalog automorphism of the domain: Mobius maps on the disc,
/// Cayley-conjugated Mobius or affine maps on Siegel domains, products
/// factor-wise.
BaseMapPtr sample_automorphism(const DomainPtr& D, Rng& rng);
/// Random automorphism with a known fixed point; used for the Jacobian
/// block checks.
struct IsotropySample {
  BaseMapPtr map;
  CVector fixed_point;
};
IsotropySample sample_isotropy_automorphism(const DomainPtr& D, Rng& rng);

}  // namespace hsd
