#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/levi.hpp"

using namespace hsd;

namespace {
HartogsPoint hpt(Complex z, Complex zeta) {
  CVector zv(1), cv(1);
  zv[0] = z;
  cv[0] = zeta;
  return {zv, cv};
}
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("defining jet at the canonical disc boundary point") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsPoint p = hpt(0.0, kSqrtPi);
  DefiningJet jet = defining_jet(H, p);
  CHECK(jet.rho == doctest::Approx(0.0));
  CHECK(std::abs(jet.d_rho[0]) < 1e-14);             // dK(0) = 0
  CHECK(std::abs(jet.d_rho[1] - kSqrtPi) < 1e-14);   // conj(zeta)
  // Tube block s K^{-s} ddbar log K = 1 * pi * 2; fiber block identity.
  CHECK(jet.levi(0, 0).real() == doctest::Approx(2.0 * kPi));
  CHECK(jet.levi(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(jet.levi(0, 1)) < 1e-14);
}

TEST_CASE("fiber part of the gradient vanishes at zeta = 0") {
  HartogsDomain H = make_hartogs(Domain::siegel_ball(1), 2, 1.5);
  CVector z(2);
  z << Complex(0.3, 1.4), Complex(0.2, 0.1);
  HartogsPoint p{z, CVector::Zero(2)};
  DefiningJet jet = defining_jet(H, p);
  CHECK(jet.d_rho.tail(2).norm() == doctest::Approx(0.0));
}

TEST_CASE("product bases give block-diagonal tube blocks") {
  auto bidisc = Domain::product({Domain::disc(), Domain::disc()});
  HartogsDomain H = make_hartogs(bidisc, 1, 1.0);
  CVector z(2);
  z << Complex(0.0), Complex(0.0);
  HartogsPoint p{z, CVector::Zero(1)};
  p.zeta[0] = 0.5;  // interior, zeta != 0
  DefiningJet jet = defining_jet(H, p);
  CHECK(std::abs(jet.levi(0, 1)) < 1e-14);
}

TEST_CASE("tangent basis annihilates the gradient") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  DefiningJet jet = defining_jet(H, hpt(0.0, kSqrtPi));
  CMatrix T = tangent_basis(jet);
  REQUIRE(T.cols() == 1);
  // Annihilator of (0, sqrt(pi)) is the z-direction.
  CHECK(std::abs(T(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(T(1, 0)) < 1e-14);
  Complex pairing = jet.d_rho.transpose() * T.col(0);
  CHECK(std::abs(pairing) < 1e-12);
}

TEST_CASE("tangent basis on a two-dimensional fiber contains the orthogonal fiber direction") {
  HartogsDomain H = make_hartogs(Domain::disc(), 2, 1.0);
  CVector zeta(2);
  zeta << Complex(kSqrtPi), Complex(0.0);
  HartogsPoint p{CVector::Zero(1), zeta};
  DefiningJet jet = defining_jet(H, p);
  CMatrix T = tangent_basis(jet);
  REQUIRE(T.cols() == 2);
  for (int c = 0; c < 2; ++c) {
    Complex pairing = jet.d_rho.transpose() * T.col(c);
    CHECK(std::abs(pairing) < 1e-12);
  }
  // The direction (0, 0, 1) lies in the span.
  CVector e3 = CVector::Zero(3);
  e3[2] = 1.0;
  CVector proj = T * (T.adjoint() * e3);
  CHECK((proj - e3).norm() < 1e-12);
}

TEST_CASE("gradient-free points are rejected") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  DefiningJet jet = defining_jet(H, hpt(0.0, 0.0));
  CHECK_THROWS_AS(tangent_basis(jet), EvaluationError);
  CHECK_THROWS_AS(levi_certificate(H, hpt(0.0, 0.1)), EvaluationError);
}

TEST_CASE("levi certificate at the canonical disc point") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  LeviReport rep = levi_certificate(H, hpt(0.0, kSqrtPi));
  CHECK(rep.min_eig == doctest::Approx(2.0 * kPi));
  CHECK(rep.fd_residual < 1e-5);
  CHECK(rep.closed_form_residual < 1e-10);
  CHECK(rep.strongly_pseudoconvex);
}

TEST_CASE("fiber-tangential directions give ||Y||^2") {
  HartogsDomain H = make_hartogs(Domain::disc(), 2, 1.0);
  CVector zeta(2);
  zeta << Complex(kSqrtPi), Complex(0.0);
  HartogsPoint p{CVector::Zero(1), zeta};
  DefiningJet jet = defining_jet(H, p);
  // V = (0, 0, 1): fiber direction orthogonal to zeta.
  CVector V = CVector::Zero(3);
  V[2] = 1.0;
  Complex q = (V.transpose() * jet.levi * V.conjugate())(0, 0);
  CHECK(q.real() == doctest::Approx(1.0));
  // Cauchy-Schwarz gap vanishes exactly when Y is parallel to zeta.
  CVector Y_par(2), Y_orth(2);
  Y_par << zeta[0], zeta[1];
  Y_orth << Complex(0.0), Complex(1.0);
  double z2 = zeta.squaredNorm();
  auto gap = [&](const CVector& Y) {
    Complex pair = (zeta.adjoint() * Y)(0, 0);
    return Y.squaredNorm() * z2 - std::norm(pair);
  };
  CHECK(gap(Y_par) == doctest::Approx(0.0));
  CHECK(gap(Y_orth) == doctest::Approx(z2));
}

TEST_CASE("strong pseudoconvexity across catalog bases and exponents") {
  Rng rng(21);
  std::vector<DomainPtr> bases = {Domain::disc(), Domain::siegel_ball(1),
                                  Domain::tube_over(Cone::lorentz(3))};
  for (const auto& base : bases) {
    for (double s : {0.5, 1.0, 2.0}) {
      HartogsDomain H = make_hartogs(base, 2, s);
      for (int i = 0; i < 25; ++i) {
        HartogsPoint p = sample_hartogs_boundary0(H, rng);
        LeviReport rep = levi_certificate(H, p);
        CHECK(rep.min_eig > 0.0);
        CHECK(rep.fd_residual < 1e-5);
        CHECK(rep.closed_form_residual < 1e-8);
      }
    }
  }
}

TEST_CASE("levi batch is deterministic and positive") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.5);
  auto reports = levi_batch(H, 100, 99, par::Exec::Parallel, false);
  auto reports2 = levi_batch(H, 100, 99, par::Exec::Serial, false);
  REQUIRE(reports.size() == 100);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].min_eig > 0.0);
    CHECK(reports[i].min_eig == reports2[i].min_eig);
  }
}
