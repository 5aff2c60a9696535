#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/automorphisms.hpp"

using namespace hsd;

namespace {
const Complex I(0.0, 1.0);
CVector cv1(Complex z) {
  CVector v(1);
  v[0] = z;
  return v;
}
HartogsPoint hpt(Complex z, Complex zeta) {
  CVector zv(1), cvv(1);
  zv[0] = z;
  cvv[0] = zeta;
  return {zv, cvv};
}
}  // namespace

TEST_CASE("mobius basics") {
  auto phi = BaseMap::mobius({Complex(0.5, 0.0), 0.0});
  CHECK(std::abs(phi->apply(cv1(0.0))[0] - Complex(-0.5)) < 1e-15);
  CHECK(std::abs(phi->jacobian(cv1(0.0)) - Complex(0.75)) < 1e-15);
  auto inv = phi->inverse();
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    CVector z = sample_interior(*Domain::disc(), rng);
    CHECK(std::abs(inv->apply(phi->apply(z))[0] - z[0]) < 1e-14);
  }
  CHECK_THROWS(BaseMap::mobius({Complex(1.2, 0.0), 0.0}));
}

TEST_CASE("cayley round trips") {
  Rng rng(2);
  auto c1 = BaseMap::cayley(CayleyKind::DiscToHalfPlane);
  auto c2 = c1->inverse();
  for (int i = 0; i < 100; ++i) {
    CVector z = sample_interior(*Domain::disc(), rng);
    CHECK(std::abs(c2->apply(c1->apply(z))[0] - z[0]) < 1e-12);
    CHECK(Domain::half_plane()->contains(c1->apply(z)).status == Region::Interior);
  }
  auto b1 = BaseMap::cayley(CayleyKind::BallToSiegelBall, 3);
  auto b2 = b1->inverse();
  for (int i = 0; i < 100; ++i) {
    CVector z = sample_interior(*Domain::ball(3), rng);
    CHECK((b2->apply(b1->apply(z)) - z).norm() < 1e-12);
    CHECK(Domain::siegel_ball(2)->contains(b1->apply(z)).status == Region::Interior);
  }
  // Jacobian against finite differences.
  for (int i = 0; i < 10; ++i) {
    CVector z = sample_interior(*Domain::ball(3), rng);
    const double h = 1e-6;
    CMatrix J(3, 3);
    for (int k = 0; k < 3; ++k) {
      CVector zp = z, zm = z;
      zp[k] += h;
      zm[k] -= h;
      J.col(k) = (b1->apply(zp) - b1->apply(zm)) / (2.0 * h);
    }
    CHECK(std::abs(J.determinant() - b1->jacobian(z)) < 1e-6 * std::abs(b1->jacobian(z)));
  }
}

TEST_CASE("affine apply on the half-plane: translation") {
  auto D = Domain::half_plane();
  AffineSiegelParams p;
  p.A = RMatrix::Identity(1, 1);
  p.B = CMatrix::Identity(0, 0);
  p.a = RVector::Ones(1);
  p.c = CVector::Zero(0);
  auto phi = BaseMap::affine_siegel(D, D, p);
  CHECK(std::abs(phi->apply(cv1(I))[0] - Complex(1.0, 1.0)) < 1e-15);
  CHECK(std::abs(phi->jacobian(cv1(I)) - Complex(1.0)) < 1e-15);
}

TEST_CASE("two half-plane translations compose to a translation") {
  auto D = Domain::half_plane();
  auto make_translation = [&](double a) {
    AffineSiegelParams p;
    p.A = RMatrix::Identity(1, 1);
    p.B = CMatrix::Identity(0, 0);
    p.a = RVector::Constant(1, a);
    p.c = CVector::Zero(0);
    return BaseMap::affine_siegel(D, D, p);
  };
  auto chain = compose_base(make_translation(1.0), make_translation(2.0));
  auto canon = canonical_form(chain);
  REQUIRE(canon != nullptr);
  CHECK(canon->kind() == BaseMap::Kind::AffineSiegel);
  CHECK(canon->affine_params().a[0] == doctest::Approx(3.0));
}

TEST_CASE("induced map apply example") {
  auto phi = BaseMap::mobius({Complex(0.5, 0.0), 0.0});
  InducedAut Phi = induced_from(phi, CMatrix::Identity(1, 1), 1.0);
  HartogsPoint out = apply(Phi, hpt(0.0, 0.1));
  CHECK(std::abs(out.z[0] - Complex(-0.5)) < 1e-15);
  CHECK(std::abs(out.zeta[0] - Complex(0.075)) < 1e-15);
}

TEST_CASE("induced_from validates U") {
  CMatrix bad(1, 1);
  bad(0, 0) = 2.0;
  CHECK_THROWS(induced_from(BaseMap::identity(Domain::disc()), bad, 1.0));
  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  InducedAut Phi = induced_from(BaseMap::identity(Domain::disc()), swap, 1.0);
  HartogsPoint p{cv1(0.1), CVector(2)};
  p.zeta << Complex(1.0), Complex(2.0);
  HartogsPoint out = apply(Phi, p);
  CHECK(std::abs(out.zeta[0] - Complex(2.0)) < 1e-15);
  CHECK(std::abs(out.zeta[1] - Complex(1.0)) < 1e-15);
}

TEST_CASE("compose of mobius maps matches pointwise application") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  auto f = BaseMap::mobius({Complex(0.5, 0.0), 0.0});
  auto g = BaseMap::mobius({Complex(-0.5, 0.0), 0.0});
  InducedAut Phi = induced_from(f, CMatrix::Identity(1, 1), 1.0);
  InducedAut Psi = induced_from(g, CMatrix::Identity(1, 1), 1.0);
  ComposeResult comp = compose(Psi, Phi);
  CHECK(comp.phase_defect == 0.0);
  // The composition fixes 0.
  HartogsPoint fixed = apply(comp.map, hpt(0.0, 0.2));
  CHECK(std::abs(fixed.z[0]) < 1e-14);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    HartogsPoint p = sample_hartogs_interior(H, rng);
    HartogsPoint via = apply(Psi, apply(Phi, p));
    HartogsPoint direct = apply(comp.map, p);
    CHECK((via.z - direct.z).norm() + (via.zeta - direct.zeta).norm() < 1e-10);
  }
}

TEST_CASE("compose with identity returns the other map pointwise") {
  HartogsDomain H = make_hartogs(Domain::disc(), 2, 1.5);
  Rng rng(4);
  InducedAut Phi = induced_from(sample_automorphism(Domain::disc(), rng),
                                random_unitary(2, rng), 1.5);
  InducedAut Id = induced_from(BaseMap::identity(Domain::disc()), CMatrix::Identity(2, 2), 1.5);
  ComposeResult c = compose(Phi, Id);
  for (int i = 0; i < 50; ++i) {
    HartogsPoint p = sample_hartogs_interior(H, rng);
    HartogsPoint a = apply(c.map, p);
    HartogsPoint b = apply(Phi, p);
    CHECK((a.z - b.z).norm() + (a.zeta - b.zeta).norm() < 1e-12);
  }
}

TEST_CASE("inverse law with non-integer exponent and phase folding") {
  Rng rng(5);
  for (const auto& base : {Domain::disc(), Domain::half_plane(), Domain::siegel_ball(1)}) {
    HartogsDomain H = make_hartogs(base, 2, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
      InducedAut Phi = induced_from(sample_automorphism(base, rng), random_unitary(2, rng), 1.5);
      InducedAut inv = inverse(Phi);
      for (int i = 0; i < 20; ++i) {
        HartogsPoint p = sample_hartogs_interior(H, rng);
        HartogsPoint rt = apply(inv, apply(Phi, p));
        CHECK((rt.z - p.z).norm() + (rt.zeta - p.zeta).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("phase defect is zero for integer s even with negative jacobians") {
  // det(B) = -1 makes J^s branch-sensitive; integer s must report 0.
  auto D = Domain::siegel_ball(2);
  AffineSiegelParams p;
  p.A = RMatrix::Identity(1, 1);
  CMatrix B(2, 2);
  B << 0, 1, 1, 0;  // unitary with det -1
  p.B = B;
  p.a = RVector::Zero(1);
  p.c = CVector::Zero(2);
  auto phi = BaseMap::affine_siegel(D, D, p);
  InducedAut Phi = induced_from(phi, CMatrix::Identity(1, 1), 2.0);
  ComposeResult comp = compose(Phi, Phi);
  CHECK(comp.phase_defect == 0.0);
}

TEST_CASE("transitive base map examples") {
  auto HP = Domain::half_plane();
  SiegelPoint p{cv1(I), CVector(0)};
  SiegelPoint q{cv1(2.0 * I), CVector(0)};
  auto phi = transitive_base_map(HP, p, q);
  CHECK(std::abs(phi->apply(cv1(I))[0] - 2.0 * I) < 1e-12);
  CHECK(phi->affine_params().A(0, 0) == doctest::Approx(2.0));

  auto identity_map = transitive_base_map(HP, p, p);
  CHECK(std::abs(identity_map->apply(cv1(I))[0] - I) < 1e-12);

  auto SB = Domain::siegel_ball(1);
  SiegelPoint sp{cv1(I), cv1(0.0)};
  SiegelPoint sq{cv1(Complex(1.0, 2.0)), cv1(0.5)};
  auto psi = transitive_base_map(SB, sp, sq);
  CVector image = psi->apply(pack_siegel(sp));
  CHECK(std::abs(image[0] - Complex(1.0, 2.0)) < 1e-9);
  CHECK(std::abs(image[1] - Complex(0.5)) < 1e-9);
  CHECK_THROWS(transitive_base_map(SB, SiegelPoint{cv1(-I), cv1(0.0)}, sq));
}

TEST_CASE("transitive base maps reach random targets on all siegel catalog domains") {
  Rng rng(6);
  std::vector<DomainPtr> domains = {Domain::half_plane(), Domain::siegel_ball(2),
                                    Domain::tube_over(Cone::lorentz(3)),
                                    Domain::tube_over(Cone::pd_hermitian(2)),
                                    Domain::siegel(make_siegel_product(make_siegel_ball(1),
                                                                       make_half_plane()))};
  for (const auto& D : domains) {
    const auto& S = D->siegel_data();
    for (int i = 0; i < 20; ++i) {
      SiegelPoint p = unpack_siegel(S, sample_interior(*D, rng));
      SiegelPoint q = unpack_siegel(S, sample_interior(*D, rng));
      auto phi = transitive_base_map(D, p, q);
      CHECK((phi->apply(pack_siegel(p)) - pack_siegel(q)).norm() < 1e-9);
    }
  }
}

TEST_CASE("realization change preserves h and membership") {
  auto sigma = BaseMap::cayley(CayleyKind::DiscToHalfPlane);
  HartogsDomain Hdisc = make_hartogs(Domain::disc(), 2, 1.5);
  HartogsDomain Hhp = make_hartogs(Domain::half_plane(), 2, 1.5);
  InducedAut change = realization_change(sigma, 2, 1.5);
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    HartogsPoint p = sample_hartogs_interior(Hdisc, rng);
    HartogsPoint q = apply(change, p);
    CHECK(hartogs_contains(Hhp, q, 1e-9).status == HartogsRegion::Interior);
    CHECK(std::abs(h_value(Hhp, q) - h_value(Hdisc, p)) < 1e-10);
  }
}

TEST_CASE("jacobian block reports") {
  // Identity: blocks (I, 0; 0, I).
  InducedAut Id = induced_from(BaseMap::identity(Domain::disc()), CMatrix::Identity(2, 2), 1.0);
  HartogsPoint p0{cv1(0.0), CVector::Zero(2)};
  JacobianBlockReport rep = jacobian_block(Id, p0);
  CHECK(rep.f2_z_norm < 1e-10);
  CHECK(rep.f2_zeta_unitary_defect < 1e-10);
  CHECK((rep.full - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);

  // Rotation about 0: the fiber block is U (J phi(0))^s, unit modulus.
  double theta = kPi / 3.0;
  InducedAut Rot = induced_from(BaseMap::mobius({Complex(0.0), theta}),
                                CMatrix::Identity(1, 1), 1.0);
  JacobianBlockReport rrep = jacobian_block(Rot, hpt(0.0, 0.0));
  CHECK(rrep.f2_z_norm < 1e-8);
  CHECK(rrep.f2_zeta_unitary_defect < 1e-8);
  Complex c = rrep.full(1, 1);
  CHECK(std::abs(c - std::exp(I * theta)) < 1e-6);

  // U = diag(phase), phi = id: the block is exactly U.
  CMatrix U(2, 2);
  U.setZero();
  U(0, 0) = std::exp(I * 0.4);
  U(1, 1) = std::exp(I * 1.1);
  InducedAut Lin = induced_from(BaseMap::identity(Domain::disc()), U, 1.0);
  HartogsPoint lp{cv1(0.0), CVector::Zero(2)};
  JacobianBlockReport lrep = jacobian_block(Lin, lp);
  CHECK((lrep.full.block(1, 1, 2, 2) - U).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("jacobian block rejects non-fixed points") {
  auto phi = BaseMap::mobius({Complex(0.5, 0.0), 0.0});
  InducedAut Phi = induced_from(phi, CMatrix::Identity(1, 1), 1.0);
  CHECK_THROWS(jacobian_block(Phi, hpt(0.0, 0.0)));
}

TEST_CASE("transformation residual of the identity map is zero") {
  auto D = Domain::disc();
  auto id = BaseMap::identity(D);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    CVector p = sample_interior(*D, rng);
    CVector q = sample_interior(*D, rng);
    CHECK(transformation_residual(*D, *D, *id, p, q) == doctest::Approx(0.0));
  }
}

TEST_CASE("mobius transformation formula closed-form example") {
  auto D = Domain::disc();
  auto phi = BaseMap::mobius({Complex(0.5, 0.0), 0.0});
  CVector zero = cv1(0.0);
  // K(-0.5, -0.5) |J(0)|^2 = (1/(pi 0.75^2)) 0.75^2 = 1/pi = K(0, 0).
  CHECK(transformation_residual(*D, *D, *phi, zero, zero) < 1e-15);
}
