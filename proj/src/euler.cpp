#include "hsd/euler.hpp"

#include <cmath>

namespace hsd {

void Polynomial::trim() {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double Polynomial::eval(double t) const {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

Complex Polynomial::eval(Complex t) const {
  Complex acc(0.0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c.size() <= 1) return Polynomial();
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> r(std::max(c.size(), o.c.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c.empty() || o.c.empty()) return Polynomial();
  std::vector<double> r(c.size() + o.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> r = c;
  for (double& v : r) v *= s;
  return Polynomial(std::move(r));
}

Polynomial interpolate(const std::vector<double>& nodes, const std::vector<double>& values) {
  require(nodes.size() == values.size() && !nodes.empty(), "interpolate: size mismatch");
  const std::size_t n = nodes.size();
  // Divided differences.
  std::vector<double> dd = values;
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t i = n - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - lvl]);
  // Newton form to monomial coefficients.
  Polynomial p = Polynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * Polynomial({-nodes[i], 1.0}) + Polynomial::constant(dd[i]);
  }
  return p;
}

Complex EulerRational::eval(Complex t) const {
  Complex one_minus = Complex(1.0) - t;
  Complex denom(1.0);
  for (int i = 0; i < pole; ++i) denom *= one_minus;
  return num.eval(t) / denom;
}

Complex EulerRational::dlog(Complex t) const {
  Complex one_minus = Complex(1.0) - t;
  return num.derivative().eval(t) / num.eval(t) + static_cast<double>(pole) / one_minus;
}

Complex EulerRational::d2log(Complex t) const {
  Complex one_minus = Complex(1.0) - t;
  Complex P = num.eval(t);
  Complex P1 = num.derivative().eval(t);
  Complex P2 = num.derivative().derivative().eval(t);
  return P2 / P - (P1 / P) * (P1 / P) +
         static_cast<double>(pole) / (one_minus * one_minus);
}

EulerRational apply_euler_operator(const Polynomial& b, int N, int k) {
  require(k >= 1, "apply_euler_operator: pole order k >= 1");
  require(!b.zero(), "apply_euler_operator: b must be nonzero");
  const int deg = b.degree();
  const int target_pole = k + deg;

  // u_j = (t d/dt + N)^j (1-t)^{-k}, tracked as numerator over (1-t)^{k+j}:
  // theta[P (1-t)^{-m}] = (t P' (1-t) + m t P) (1-t)^{-(m+1)}.
  Polynomial t_poly({0.0, 1.0});
  Polynomial one_minus_t({1.0, -1.0});

  Polynomial acc;  // numerator over (1-t)^{target_pole}
  Polynomial u = Polynomial::constant(1.0);
  int u_pole = k;
  for (int j = 0; j <= deg; ++j) {
    if (j > 0) {
      Polynomial theta_u = t_poly * u.derivative() * one_minus_t +
                           t_poly * u * static_cast<double>(u_pole);
      Polynomial shifted_N = u * one_minus_t * static_cast<double>(N);
      u = theta_u + shifted_N;  // (theta + N) u, now over pole u_pole + 1
      u_pole += 1;
    }
    double coeff = j <= b.degree() ? b.c[j] : 0.0;
    if (coeff != 0.0) {
      Polynomial lift = u;
      for (int i = u_pole; i < target_pole; ++i) lift = lift * one_minus_t;
      acc = acc + lift * coeff;
    }
  }
  return {acc, target_pole};
}

}  // namespace hsd
