#pragma once

#include <vector>

#include "hsd/types.hpp"

namespace hsd {

/// Dense polynomial with real coefficients, c[k] t^k.
struct Polynomial {
  std::vector<double> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c(std::move(coeffs)) { trim(); }
  static Polynomial constant(double v) { return Polynomial({v}); }

  int degree() const { return c.empty() ? 0 : static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim();

  double eval(double t) const;
  Complex eval(Complex t) const;
  Polynomial derivative() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double s) const;
};

/// Interpolating polynomial through (nodes[i], values[i]); exact for
/// polynomial data up to machine precision (Newton divided differences).
Polynomial interpolate(const std::vector<double>& nodes, const std::vector<double>& values);

/// Rational function P(t) / (1-t)^pole.
struct EulerRational {
  Polynomial num;
  int pole = 0;

  Complex eval(Complex t) const;
  /// log-derivative helpers for the chain rule:
  Complex dlog(Complex t) const;    // d/dt log R
  Complex d2log(Complex t) const;   // d^2/dt^2 log R
};

/// Exact symbolic application of the polynomial differential operator
/// b(t d/dt + N) to (1-t)^{-k}, returned over the pole (1-t)^{k+deg b}.
EulerRational apply_euler_operator(const Polynomial& b, int N, int k);

}  // namespace hsd
