#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/automorphisms.hpp"
#include "hsd/kernels.hpp"

using namespace hsd;

namespace {
CVector cv(std::initializer_list<Complex> vals) {
  CVector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (Complex c : vals) v[i++] = c;
  return v;
}
const Complex I(0.0, 1.0);
}  // namespace

TEST_CASE("disc kernel at the origin equals the monomial-series value") {
  // Orthonormal monomials sqrt((j+1)/pi) z^j: at 0 only j = 0 survives,
  // so the series gives exactly 1/pi.
  double oracle = 1.0 / kPi;
  auto D = Domain::disc();
  Complex got = kernel_eval(*D, cv({0.0}), cv({0.0}));
  CHECK(got.real() == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(got.imag() == doctest::Approx(0.0));
  // And away from the origin the series sum_j (j+1)/pi x^j = 1/(pi(1-x)^2).
  Complex z(0.3, 0.2), w(0.1, -0.4);
  Complex x = z * std::conj(w);
  Complex series(0.0);
  Complex xj(1.0);
  for (int j = 0; j < 400; ++j) {
    series += double(j + 1) / kPi * xj;
    xj *= x;
  }
  CHECK(std::abs(kernel_eval(*D, cv({z}), cv({w})) - series) < 1e-14);
}

TEST_CASE("half-plane kernel value via the Cayley oracle") {
  auto H = Domain::half_plane();
  Complex got = kernel_eval(*H, cv({I}), cv({I}));
  CHECK(got.real() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
  // Transported from the disc: residual of the transformation formula.
  auto sigma = BaseMap::cayley(CayleyKind::DiscToHalfPlane);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    CVector p = sample_interior(*Domain::disc(), rng);
    CVector q = sample_interior(*Domain::disc(), rng);
    CHECK(transformation_residual(*Domain::disc(), *H, *sigma, p, q) < 1e-12);
  }
}

TEST_CASE("siegel ball kernel constant against the ball kernel") {
  auto SB = Domain::siegel_ball(1);
  Complex got = kernel_eval(*SB, cv({I, 0.0}), cv({I, 0.0}));
  CHECK(got.real() == doctest::Approx(1.0 / (2.0 * kPi * kPi)).epsilon(1e-13));
  // K_{B^2}(0,0) = 2/pi^2 pushed through the Cayley map with J(0) = 2i.
  double ball_val = 2.0 / (kPi * kPi);
  CHECK(got.real() == doctest::Approx(ball_val / 4.0).epsilon(1e-13));
  auto sigma = BaseMap::cayley(CayleyKind::BallToSiegelBall, 2);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    CVector p = sample_interior(*Domain::ball(2), rng);
    CVector q = sample_interior(*Domain::ball(2), rng);
    CHECK(transformation_residual(*Domain::ball(2), *SB, *sigma, p, q) < 1e-12);
  }
}

TEST_CASE("tube kernel constants") {
  CHECK(lorentz_tube_constant(2) == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
  CHECK(lorentz_tube_constant(3) ==
        doctest::Approx(3.0 / (8.0 * kPi * kPi * kPi)).epsilon(1e-13));
  CHECK(hermitian_tube_constant(1) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-13));
  CHECK(hermitian_tube_constant(2) ==
        doctest::Approx(3.0 / (16.0 * std::pow(kPi, 4))).epsilon(1e-13));
}

TEST_CASE("lorentz(2) tube kernel equals the rotated half-plane product kernel") {
  auto src = Domain::tube_over(Cone::lorentz(2));
  auto dst = Domain::tube_over(Cone::product({Cone::half_line(), Cone::half_line()}));
  AffineSiegelParams p;
  double r2 = 1.0 / std::sqrt(2.0);
  p.A = RMatrix(2, 2);
  p.A << r2, -r2, r2, r2;
  p.B = CMatrix::Identity(0, 0);
  p.a = RVector::Zero(2);
  p.c = CVector::Zero(0);
  auto rot = BaseMap::affine_siegel(src, dst, p);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    CVector z = sample_interior(*src, rng);
    CVector w = sample_interior(*src, rng);
    CHECK(transformation_residual(*src, *dst, *rot, z, w) < 1e-13);
  }
}

TEST_CASE("hermitian symmetry and diagonal positivity, all catalog kernels") {
  std::vector<DomainPtr> domains = {
      Domain::disc(),
      Domain::ball(2),
      Domain::half_plane(),
      Domain::siegel_ball(2),
      Domain::product({Domain::disc(), Domain::disc()}),
      Domain::tube_over(Cone::lorentz(3)),
      Domain::tube_over(Cone::pd_hermitian(2))};
  Rng rng(6);
  for (const auto& D : domains) {
    KernelModel model(*D);
    for (int i = 0; i < 100; ++i) {
      CVector p = sample_interior(*D, rng);
      CVector q = sample_interior(*D, rng);
      Complex kpq = model.eval(p, q);
      Complex kqp = model.eval(q, p);
      CHECK(std::abs(kpq - std::conj(kqp)) <= 1e-12 * std::abs(kpq));
      Complex diag = model.eval(p, p);
      CHECK(diag.real() > 0.0);
      CHECK(std::abs(diag.imag()) <= 1e-14 * diag.real());
    }
  }
}

TEST_CASE("kernel jet closed forms") {
  auto D = Domain::disc();
  KernelJet jet = kernel_jet(*D, cv({0.0}));
  CHECK(jet.value == doctest::Approx(1.0 / kPi));
  CHECK(std::abs(jet.grad[0]) == doctest::Approx(0.0));
  CHECK(jet.hess(0, 0).real() == doctest::Approx(2.0));

  auto H = Domain::half_plane();
  KernelJet hj = kernel_jet(*H, cv({I}));
  CHECK(hj.hess(0, 0).real() == doctest::Approx(0.5));

  // Product jets are blockwise direct sums.
  auto P = Domain::product({Domain::disc(), Domain::half_plane()});
  KernelJet pj = kernel_jet(*P, cv({0.0, I}));
  CHECK(pj.hess(0, 0).real() == doctest::Approx(2.0));
  CHECK(pj.hess(1, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(pj.hess(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("jet Hessian is positive definite on samples") {
  std::vector<DomainPtr> domains = {Domain::siegel_ball(2),
                                    Domain::tube_over(Cone::lorentz(3)),
                                    Domain::tube_over(Cone::pd_hermitian(2))};
  Rng rng(7);
  for (const auto& D : domains)
    for (int i = 0; i < 25; ++i) {
      KernelJet jet = kernel_jet(*D, sample_interior(*D, rng));
      CHECK((jet.hess - jet.hess.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(jet.hess, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("tumanov determinant closed forms") {
  auto D = Domain::disc();
  CHECK(tumanov_r(*D, cv({0.0}), cv({0.0})).real() == doctest::Approx(2.0));
  CHECK(tumanov_r(*D, cv({0.5}), cv({0.0})).real() == doctest::Approx(2.0));
  auto P = Domain::product({Domain::disc(), Domain::disc()});
  CHECK(tumanov_r(*P, cv({0.0, 0.0}), cv({0.0, 0.0})).real() == doctest::Approx(4.0));
}

TEST_CASE("mixed hessian hermitian relation between swapped arguments") {
  auto D = Domain::tube_over(Cone::lorentz(3));
  KernelModel model(*D);
  Rng rng(8);
  CVector p = sample_interior(*D, rng);
  CVector q = sample_interior(*D, rng);
  CMatrix Mpq = model.mixed_log_hessian(p, q);
  CMatrix Mqp = model.mixed_log_hessian(q, p);
  CHECK((Mpq - Mqp.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("product rule is exact") {
  auto D1 = Domain::disc();
  auto D2 = Domain::siegel_ball(1);
  auto P = Domain::product({D1, D2});
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    CVector a = sample_interior(*D1, rng);
    CVector b = sample_interior(*D2, rng);
    CVector a2 = sample_interior(*D1, rng);
    CVector b2 = sample_interior(*D2, rng);
    CVector p(3), q(3);
    p << a[0], b[0], b[1];
    q << a2[0], b2[0], b2[1];
    Complex lhs = kernel_eval(*P, p, q);
    Complex rhs = kernel_eval(*D1, a, a2) * kernel_eval(*D2, b, b2);
    CHECK(lhs == rhs);  // bit-exact by construction
  }
}

TEST_CASE("branch cut of a non-integer power is a reported error") {
  auto D = Domain::disc();
  KernelModel model(*D);
  // 1 - z conj(w) = -1 < 0 at z = 2, w = 1 (off-domain evaluation);
  // with power 0.25 the factor exponent -0.5 is non-integral.
  CHECK_THROWS_AS(model.pow_eval(cv({2.0}), cv({1.0}), 0.25), EvaluationError);
  // The integer-exponent kernel itself is fine there.
  CHECK_NOTHROW(model.eval(cv({2.0}), cv({1.0})));
}

TEST_CASE("gamma weight ratio basics") {
  std::vector<DomainPtr> domains = {
      Domain::disc(), Domain::ball(3), Domain::half_plane(), Domain::siegel_ball(2),
      Domain::product({Domain::disc(), Domain::disc()}),
      Domain::tube_over(Cone::lorentz(3)), Domain::tube_over(Cone::pd_hermitian(2))};
  for (const auto& D : domains) {
    CHECK(gamma_weight_ratio(*D, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gamma_weight_ratio(*D, 1.0) > 0.0);
  }
  CHECK(gamma_weight_ratio(*Domain::disc(), 2.5) == doctest::Approx(6.0));
  // Half-plane is biholomorphic to the disc: same gamma.
  for (double c : {0.5, 1.0, 3.25})
    CHECK(gamma_weight_ratio(*Domain::half_plane(), c) ==
          doctest::Approx(gamma_weight_ratio(*Domain::disc(), c)).epsilon(1e-12));
  // Siegel ball(m) matches ball(m+1).
  for (double c : {0.5, 2.0})
    CHECK(gamma_weight_ratio(*Domain::siegel_ball(1), c) ==
          doctest::Approx(gamma_weight_ratio(*Domain::ball(2), c)).epsilon(1e-12));
  // Lorentz(2) tube = product of two half-planes: gamma must factor.
  for (double c : {0.5, 1.0, 2.0})
    CHECK(gamma_weight_ratio(*Domain::tube_over(Cone::lorentz(2)), c) ==
          doctest::Approx(std::pow(2.0 * c + 1.0, 2)).epsilon(1e-10));
}

TEST_CASE("gamma ratio is a polynomial of degree dim") {
  // Fit gamma(c) at dim+1 integer nodes and verify extra nodes.
  std::vector<DomainPtr> domains = {Domain::ball(2), Domain::tube_over(Cone::lorentz(3)),
                                    Domain::tube_over(Cone::pd_hermitian(2))};
  for (const auto& D : domains) {
    const int d = D->dim();
    std::vector<double> nodes, values;
    for (int i = 0; i <= d; ++i) {
      nodes.push_back(1.0 + i);
      values.push_back(gamma_weight_ratio(*D, 1.0 + i));
    }
    Polynomial fit = interpolate(nodes, values);
    for (double extra : {0.25, 4.5, 7.0}) {
      double want = gamma_weight_ratio(*D, extra);
      CHECK(fit.eval(extra) == doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("split siegel recovers product blocks") {
  auto mixed = make_siegel_product(make_siegel_ball(2), make_half_plane());
  std::vector<std::vector<int>> fibers;
  auto blocks = split_siegel(mixed, &fibers);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].n == 1);
  CHECK(blocks[0].m == 2);
  CHECK(blocks[1].n == 1);
  CHECK(blocks[1].m == 0);
  CHECK(fibers[0] == std::vector<int>({0, 1}));
  CHECK(fibers[1].empty());
}
