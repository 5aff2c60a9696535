#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/hartogs.hpp"

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

TEST_CASE("membership and h values on the disc base") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  auto c = hartogs_contains(H, hpt(0.0, 0.5));
  CHECK(c.status == HartogsRegion::Interior);
  CHECK(c.h == doctest::Approx(0.25 / kPi));

  c = hartogs_contains(H, hpt(0.0, kSqrtPi));
  CHECK(c.status == HartogsRegion::Boundary0);
  CHECK(c.h == doctest::Approx(1.0));

  c = hartogs_contains(H, hpt(0.0, 0.0));
  CHECK(c.status == HartogsRegion::Interior);
  CHECK(c.h == doctest::Approx(0.0));

  // Base boundary stratum and exterior.
  c = hartogs_contains(H, hpt(1.0, 0.0));
  CHECK(c.status == HartogsRegion::BoundaryBase);
  c = hartogs_contains(H, hpt(1.0, 0.3));
  CHECK(c.status == HartogsRegion::Exterior);
  c = hartogs_contains(H, hpt(1.5, 0.0));
  CHECK(c.status == HartogsRegion::Exterior);

  HartogsDomain H2 = make_hartogs(Domain::disc(), 1, 2.0);
  CHECK(h_value(H2, hpt(0.0, kPi)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(h_value(H2, hpt(1.5, 0.0)), EvaluationError);
}

TEST_CASE("operator kernel instantiation for the disc base") {
  for (double s : {1.0, 1.5, 2.0}) {
    HartogsKernel kernel(make_hartogs(Domain::disc(), 2, s));
    // b(x) = gamma(s x) = 2 s x + 1 for the disc.
    REQUIRE(kernel.b_polynomial().c.size() == 2);
    CHECK(kernel.b_polynomial().c[0] == doctest::Approx(1.0));
    CHECK(kernel.b_polynomial().c[1] == doctest::Approx(2.0 * s));
    CHECK(kernel.pole_order() == 3);
    CHECK(kernel.prefactor_exponent() == doctest::Approx(2.0 * s + 1.0));
  }
}

TEST_CASE("origin value 3/pi^3 from both evaluators") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsKernel kernel(H);
  HartogsPoint o = hpt(0.0, 0.0);
  double want = 3.0 / std::pow(kPi, 3);
  CHECK(kernel.eval(o, o).real() == doctest::Approx(want).epsilon(1e-13));
  SeriesResult sr = hartogs_kernel_series(H, o, o, 50);
  CHECK(sr.converged);
  CHECK(sr.value.real() == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("fiber-zero slice is a function of the base kernel only") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsKernel kernel(H);
  HartogsPoint q0 = hpt(Complex(0.2, 0.1), 0.0);
  Complex v1 = kernel.eval(hpt(0.1, 0.0), q0);
  Complex v2 = kernel.eval(hpt(0.1, 0.4), q0);
  CHECK(std::abs(v1 - v2) < 1e-15);
  // Closed form 3 K(z,z')^2 / pi = 3/(pi^3 (1 - z conj(z'))^4).
  Complex x = Complex(0.1) * std::conj(Complex(0.2, 0.1));
  Complex want = 3.0 / (std::pow(kPi, 3) * std::pow(Complex(1.0) - x, 4));
  CHECK(std::abs(v1 - want) < 1e-14);
}

TEST_CASE("series matches its own closed-form resummation on the fiber-zero slice") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsPoint p = hpt(0.3, 0.0), q = hpt(0.5, 0.0);
  SeriesResult sr = hartogs_kernel_series(H, p, q, 200);
  Complex x = Complex(0.3) * std::conj(Complex(0.5));
  Complex want = 3.0 / (std::pow(kPi, 3) * std::pow(Complex(1.0) - x, 4));
  CHECK(std::abs(sr.value - want) / std::abs(want) < 1e-10);
}

TEST_CASE("operator matches series on random pairs, disc and ball bases") {
  Rng rng(11);
  for (const auto& base : {Domain::disc(), Domain::ball(2)}) {
    for (int N : {1, 2}) {
      for (double s : {1.0, 1.5, 2.0}) {
        HartogsDomain H = make_hartogs(base, N, s);
        HartogsKernel kernel(H);
        for (int i = 0; i < 20; ++i) {
          HartogsPoint p = sample_hartogs_interior(H, rng, 0.8);
          HartogsPoint q = sample_hartogs_interior(H, rng, 0.8);
          p.z *= 0.7;
          q.z *= 0.7;
          Complex op = kernel.eval(p, q);
          SeriesResult sr = hartogs_kernel_series(H, p, q, 300);
          REQUIRE(sr.converged);
          CHECK(std::abs(op - sr.value) / std::abs(sr.value) < 1e-8);
          CHECK(std::abs(op - sr.value) <=
                std::max(10.0 * sr.tail_bound, 1e-9 * std::abs(sr.value)));
        }
      }
    }
  }
}

TEST_CASE("hermitian symmetry and diagonal positivity of the hartogs kernel") {
  Rng rng(12);
  HartogsDomain H = make_hartogs(Domain::siegel_ball(1), 2, 1.5);
  HartogsKernel kernel(H);
  for (int i = 0; i < 100; ++i) {
    HartogsPoint p = sample_hartogs_interior(H, rng, 0.7);
    HartogsPoint q = sample_hartogs_interior(H, rng, 0.7);
    Complex kpq = kernel.eval(p, q);
    Complex kqp = kernel.eval(q, p);
    CHECK(std::abs(kpq - std::conj(kqp)) <= 1e-11 * std::abs(kpq));
    CHECK(kernel.eval(p, p).real() > 0.0);
  }
}

TEST_CASE("evaluation extends past the boundary stratum at fixed interior second argument") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsKernel kernel(H);
  HartogsPoint q = hpt(0.1, 0.2);  // small fiber keeps |t| < 1
  double radius = kSqrtPi;         // boundary fiber radius over z = 0
  Complex prev;
  for (double f : {0.95, 0.99, 1.0, 1.01, 1.05}) {
    HartogsPoint p = hpt(0.0, f * radius);
    CHECK(hartogs_contains(H, p, 1e-12).status !=
          (f < 1.0 ? HartogsRegion::Exterior : HartogsRegion::Interior));
    Complex v = kernel.eval(p, q);
    CHECK(std::isfinite(v.real()));
    if (f > 0.95) CHECK(std::abs(v - prev) < 0.2 * std::abs(v));
    prev = v;
  }
  SeriesResult sr = hartogs_kernel_series(H, hpt(0.0, 1.01 * radius), q, 300);
  CHECK(sr.converged);
  CHECK(std::abs(sr.value - kernel.eval(hpt(0.0, 1.01 * radius), q)) / std::abs(sr.value) <
        1e-8);
}

TEST_CASE("convergence region error") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsKernel kernel(H);
  // Diagonal pair beyond the boundary stratum has t = h > 1.
  HartogsPoint p = hpt(0.0, 1.05 * kSqrtPi);
  CHECK_THROWS_AS(kernel.eval(p, p), EvaluationError);
  CHECK_THROWS_AS(kernel.tumanov_r(p, p), EvaluationError);
}

TEST_CASE("hartogs mixed log hessian agrees with finite differences") {
  Rng rng(13);
  for (const auto& base : {Domain::disc(), Domain::siegel_ball(1)}) {
    for (double s : {1.0, 1.5}) {
      HartogsDomain H = make_hartogs(base, 2, s);
      HartogsKernel kernel(H);
      const int d = base->dim() + 2;
      for (int trial = 0; trial < 5; ++trial) {
        HartogsPoint p = sample_hartogs_interior(H, rng, 0.5);
        HartogsPoint q = p;  // near-diagonal keeps logs on one branch
        q.z *= 1.02;
        CMatrix M = kernel.mixed_log_hessian(p, q);
        const double h = 1e-5;
        auto logk = [&](const CVector& a, const CVector& b) {
          return std::log(kernel.eval(unpack_hartogs(H, a), unpack_hartogs(H, b)));
        };
        CVector vp = pack_hartogs(p), vq = pack_hartogs(q);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            CVector pa = vp, ma = vp, qb = vq, mb = vq;
            pa[i] += h;
            ma[i] -= h;
            qb[j] += h;
            mb[j] -= h;
            Complex fd =
                (logk(pa, qb) - logk(pa, mb) - logk(ma, qb) + logk(ma, mb)) / (4.0 * h * h);
            CHECK(std::abs(fd - M(i, j)) <= 2e-5 * std::max(1.0, std::abs(M(i, j))));
          }
      }
    }
  }
}

TEST_CASE("hartogs tumanov determinant at the origin pair") {
  HartogsDomain H = make_hartogs(Domain::disc(), 1, 1.0);
  HartogsKernel kernel(H);
  HartogsPoint o = hpt(0.0, 0.0);
  // Blocks at the origin: z block (sN+1) * 2 = 4, fiber block L(0) K = (1/3 + 3)/pi.
  double want = 4.0 * (10.0 / (3.0 * kPi));
  CHECK(kernel.tumanov_r(o, o).real() == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("boundary samplers") {
  Rng rng(14);
  HartogsDomain H = make_hartogs(Domain::siegel_ball(1), 2, 1.5);
  for (int i = 0; i < 50; ++i) {
    HartogsPoint p = sample_hartogs_boundary0(H, rng);
    CHECK(hartogs_contains(H, p, 1e-9).status == HartogsRegion::Boundary0);
    HartogsPoint b = sample_hartogs_boundary_base(H, rng);
    CHECK(hartogs_contains(H, b, 1e-7).status == HartogsRegion::BoundaryBase);
  }
}

TEST_CASE("series oracle rejects unsupported bases") {
  HartogsDomain H = make_hartogs(Domain::half_plane(), 1, 1.0);
  CHECK_THROWS(hartogs_kernel_series(H, hpt(Complex(0, 1), 0.1), hpt(Complex(0, 1), 0.1), 50));
}

TEST_CASE("series summation is bit-stable across execution modes") {
  HartogsDomain H = make_hartogs(Domain::disc(), 2, 1.5);
  Rng rng(15);
  HartogsPoint p = sample_hartogs_interior(H, rng, 0.8);
  HartogsPoint q = sample_hartogs_interior(H, rng, 0.8);
  SeriesResult a = hartogs_kernel_series(H, p, q, 200, par::Exec::Serial);
  SeriesResult b = hartogs_kernel_series(H, p, q, 200, par::Exec::Parallel);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
}
