#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/euler.hpp"

using namespace hsd;

TEST_CASE("operator application: b(x) = x, N = 1, k = 2") {
  // (t d/dt + 1)(1-t)^{-2} = (1+t)/(1-t)^3
  EulerRational r = apply_euler_operator(Polynomial({0.0, 1.0}), 1, 2);
  CHECK(r.pole == 3);
  REQUIRE(r.num.c.size() == 2);
  CHECK(r.num.c[0] == doctest::Approx(1.0));
  CHECK(r.num.c[1] == doctest::Approx(1.0));
}

TEST_CASE("constant operator leaves the pole unchanged") {
  EulerRational r = apply_euler_operator(Polynomial({1.0}), 5, 4);
  CHECK(r.pole == 4);
  REQUIRE(r.num.c.size() == 1);
  CHECK(r.num.c[0] == doctest::Approx(1.0));
}

TEST_CASE("operator application: b(x) = x, N = 0, k = 1") {
  // t d/dt (1-t)^{-1} = t/(1-t)^2
  EulerRational r = apply_euler_operator(Polynomial({0.0, 1.0}), 0, 1);
  CHECK(r.pole == 2);
  REQUIRE(r.num.c.size() == 2);
  CHECK(r.num.c[0] == doctest::Approx(0.0));
  CHECK(r.num.c[1] == doctest::Approx(1.0));
}

TEST_CASE("value at t = 0 equals b(N)") {
  for (int N : {0, 1, 3}) {
    for (int k : {1, 2, 5}) {
      Polynomial b({0.7, -1.3, 2.0});  // 2x^2 - 1.3x + 0.7
      EulerRational r = apply_euler_operator(b, N, k);
      CHECK(r.eval(Complex(0.0)).real() == doctest::Approx(b.eval(double(N))));
    }
  }
}

TEST_CASE("operator result matches the defining series") {
  // b(theta + N)(1-t)^{-k} = sum_j C(k-1+j, j) b(N + j) t^j
  Polynomial b({1.0, 2.0, 0.5});
  const int N = 2, k = 3;
  EulerRational r = apply_euler_operator(b, N, k);
  for (double t : {0.1, 0.35, -0.2}) {
    double series = 0.0;
    double binom = 1.0;  // C(k-1+j, j)
    double tj = 1.0;
    for (int j = 0; j < 200; ++j) {
      series += binom * b.eval(double(N + j)) * tj;
      binom *= double(k + j) / double(j + 1);
      tj *= t;
    }
    CHECK(r.eval(Complex(t)).real() == doctest::Approx(series).epsilon(1e-12));
  }
}

TEST_CASE("interpolation recovers exact polynomials") {
  Polynomial p({3.0, -2.0, 0.0, 1.5});
  std::vector<double> nodes = {1.0, 2.0, 3.0, 4.0};
  std::vector<double> values;
  for (double x : nodes) values.push_back(p.eval(x));
  Polynomial q = interpolate(nodes, values);
  REQUIRE(q.c.size() == p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i)
    CHECK(q.c[i] == doctest::Approx(p.c[i]).epsilon(1e-12));
}

TEST_CASE("rational log derivatives") {
  EulerRational r{Polynomial({1.0, 1.0}), 3};  // (1+t)/(1-t)^3
  Complex t(0.2, 0.1);
  Complex dlog = r.dlog(t);
  Complex want = Complex(1.0) / (Complex(1.0) + t) + 3.0 / (Complex(1.0) - t);
  CHECK(std::abs(dlog - want) < 1e-13);
  Complex d2 = r.d2log(t);
  Complex want2 = -Complex(1.0) / ((Complex(1.0) + t) * (Complex(1.0) + t)) +
                  3.0 / ((Complex(1.0) - t) * (Complex(1.0) - t));
  CHECK(std::abs(d2 - want2) < 1e-13);
}

TEST_CASE("preconditions") {
  CHECK_THROWS(apply_euler_operator(Polynomial({0.0, 1.0}), 1, 0));
  CHECK_THROWS(apply_euler_operator(Polynomial(), 1, 2));
}
