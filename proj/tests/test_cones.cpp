#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/automorphisms.hpp"
#include "hsd/cones.hpp"
#include "hsd/domain.hpp"

using namespace hsd;

TEST_CASE("half-line membership") {
  auto V = Cone::half_line();
  RVector x(1);
  x[0] = 1.0;
  auto c = V->contains(x);
  CHECK(c.status == Region::Interior);
  CHECK(c.defect == doctest::Approx(1.0));
}

TEST_CASE("lorentz membership defect") {
  auto V = Cone::lorentz(3);
  RVector x(3);
  x << 2.0, 1.0, 1.0;
  auto c = V->contains(x);
  CHECK(c.status == Region::Interior);
  CHECK(c.defect == doctest::Approx(2.0 - std::sqrt(2.0)));
  x << 1.0, 1.0, 0.0;
  c = V->contains(x);
  CHECK(c.status == Region::Boundary);
  CHECK(c.defect == doctest::Approx(0.0));
}

TEST_CASE("pd hermitian membership via eigenvalues") {
  auto V = Cone::pd_hermitian(2);
  CMatrix X(2, 2);
  X << Complex(2, 0), Complex(0.5, 0.25), Complex(0.5, -0.25), Complex(1, 0);
  auto c = V->contains(flatten_hermitian(X));
  CHECK(c.status == Region::Interior);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(X, Eigen::EigenvaluesOnly);
  CHECK(c.defect == doctest::Approx(es.eigenvalues().minCoeff()));
  // Rank-one matrix sits on the boundary.
  CMatrix Y = CMatrix::Zero(2, 2);
  Y(0, 0) = 1.0;
  CHECK(V->contains(flatten_hermitian(Y)).status == Region::Boundary);
}

TEST_CASE("hermitian flattening round trip and basis") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = rng.complex_normal();
    CMatrix X = g + g.adjoint();
    RVector flat = flatten_hermitian(X);
    CHECK((unflatten_hermitian(flat, 3) - X).cwiseAbs().maxCoeff() < 1e-14);
    CMatrix rebuilt = CMatrix::Zero(3, 3);
    for (int a = 0; a < 9; ++a) rebuilt += flat[a] * hermitian_basis_matrix(3, a);
    CHECK((rebuilt - X).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("dimension mismatch is a descriptive error") {
  auto V = Cone::lorentz(3);
  RVector x(2);
  x << 1.0, 0.0;
  CHECK_THROWS_AS(V->contains(x), DimensionError);
}

TEST_CASE("linear automorphism examples") {
  auto H = Cone::half_line();
  RMatrix A = cone_linear_aut(*H, {HalfLineAutParams{2.0}});
  CHECK(A(0, 0) == doctest::Approx(2.0));
  CHECK_THROWS(cone_linear_aut(*H, {HalfLineAutParams{-1.0}}));

  auto P1 = Cone::pd_hermitian(1);
  CMatrix g(1, 1);
  g(0, 0) = 2.0;
  RMatrix A1 = cone_linear_aut(*P1, {PDHermitianAutParams{g}});
  CHECK(A1(0, 0) == doctest::Approx(4.0));
  g(0, 0) = 0.0;
  CHECK_THROWS(cone_linear_aut(*P1, {PDHermitianAutParams{g}}));

  auto L = Cone::lorentz(3);
  RMatrix AL = cone_linear_aut(*L, {LorentzAutParams{1.0, 0.0, 1, 0.0}});
  CHECK((AL - RMatrix::Identity(3, 3)).norm() == doctest::Approx(0.0));
}

TEST_CASE("transitive map examples and residuals") {
  auto H = Cone::half_line();
  RVector x(1), y(1);
  x[0] = 1.0;
  y[0] = 3.0;
  CHECK(cone_transitive_map(*H, x, y)(0, 0) == doctest::Approx(3.0));

  auto P = Cone::pd_hermitian(2);
  RVector I2 = flatten_hermitian(CMatrix::Identity(2, 2));
  CHECK((cone_transitive_map(*P, I2, I2) - RMatrix::Identity(4, 4)).norm() < 1e-12);

  auto L = Cone::lorentz(3);
  RVector a(3), bvec(3);
  a << 1.0, 0.0, 0.0;
  bvec << 2.0, 1.0, 0.0;
  RMatrix A = cone_transitive_map(*L, a, bvec);
  CHECK((A * a - bvec).norm() <= 1e-10);
  CHECK_THROWS(cone_transitive_map(*L, RVector::Zero(3), bvec));
}

TEST_CASE("sampled cone axioms") {
  std::vector<ConePtr> cones = {Cone::half_line(), Cone::lorentz(4), Cone::pd_hermitian(2),
                                Cone::product({Cone::lorentz(2), Cone::half_line()})};
  Rng rng(42);
  for (const auto& V : cones) {
    for (int i = 0; i < 200; ++i) {
      RVector x = sample_cone_interior(*V, rng);
      CHECK(V->contains(rng.uniform(1e-2, 10.0) * x).status == Region::Interior);
      CHECK(V->contains(-x).status == Region::Exterior);
      RVector y = sample_cone_interior(*V, rng);
      CHECK(V->contains(x + y).status == Region::Interior);
    }
    for (int i = 0; i < 50; ++i) {
      RVector x = sample_cone_boundary(*V, rng);
      CHECK(std::abs(V->defect(x)) < 1e-7);
    }
  }
}

TEST_CASE("transitive round trip is the identity") {
  std::vector<ConePtr> cones = {Cone::lorentz(3), Cone::pd_hermitian(2),
                                Cone::product({Cone::half_line(), Cone::lorentz(3)})};
  Rng rng(43);
  for (const auto& V : cones) {
    for (int i = 0; i < 25; ++i) {
      RVector x = sample_cone_interior(*V, rng);
      RVector y = sample_cone_interior(*V, rng);
      RMatrix A = cone_transitive_map(*V, x, y);
      RMatrix Ainv = cone_transitive_map(*V, y, x);
      CHECK((A * x - y).norm() < 1e-9);
      CHECK((A * Ainv - RMatrix::Identity(V->ambient_dim(), V->ambient_dim())).norm() < 1e-9);
    }
  }
}
