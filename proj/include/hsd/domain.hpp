#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsd/rng.hpp"
#include "hsd/siegel.hpp"

namespace hsd {

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

/// Catalog domain handle: bounded realizations (disc, ball), Siegel
/// domains of type II, and finite products. Points are flattened complex
/// vectors; Siegel blocks store w first, then u; products concatenate
/// factor coordinates in order.
class Domain {
 public:
  enum class Kind { Disc, Ball, Siegel, Product };

  static DomainPtr disc();
  static DomainPtr ball(int m);
  static DomainPtr siegel(SiegelDomain D);
  static DomainPtr half_plane() { return siegel(make_half_plane()); }
  static DomainPtr siegel_ball(int m) { return siegel(make_siegel_ball(m)); }
  static DomainPtr tube_over(ConePtr cone) { return siegel(make_tube_over(std::move(cone))); }
  static DomainPtr product(std::vector<DomainPtr> factors);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int ball_m() const { return ball_m_; }
  bool bounded() const { return bounded_; }
  const SiegelDomain& siegel_data() const { return *siegel_; }
  const std::vector<DomainPtr>& factors() const { return factors_; }

  Classification contains(const CVector& z, double tol = kDefaultTol) const;
  std::string describe() const;

 private:
  Domain() = default;
  Kind kind_ = Kind::Disc;
  int dim_ = 1;
  int ball_m_ = 0;
  bool bounded_ = true;
  std::optional<SiegelDomain> siegel_;
  std::vector<DomainPtr> factors_;
};

/// Well-interior sample used by the statistical and property suites.
CVector sample_interior(const Domain& D, Rng& rng);
RVector sample_cone_interior(const Cone& V, Rng& rng);
RVector sample_cone_boundary(const Cone& V, Rng& rng);
/// Shilov-boundary sample of a Siegel domain: Im w = F(u,u).
SiegelPoint sample_shilov(const SiegelDomain& D, Rng& rng);
/// Boundary sample of a domain handle (bounded: unit sphere directions;
/// Siegel: cone boundary defects).
CVector sample_boundary(const Domain& D, Rng& rng);

}  // namespace hsd
