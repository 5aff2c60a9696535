#include "hsd/hartogs.hpp"

#include <cmath>
#include <limits>

namespace {
// Integer power by repeated multiplication; ipow(0, 0) = 1.
hsd::Complex ipow(hsd::Complex base, int k) {
  hsd::Complex acc(1.0, 0.0);
  for (int i = 0; i < k; ++i) acc *= base;
  return acc;
}
}  // namespace

namespace hsd {

HartogsDomain make_hartogs(DomainPtr base, int N, double s) {
  require(base != nullptr, "hartogs: base domain required");
  require(N >= 1, "hartogs: N >= 1");
  require(s > 0.0, "hartogs: s > 0");
  return {std::move(base), N, s};
}

double h_value(const HartogsDomain& H, const HartogsPoint& p) {
  require_dim(p.z.size(), H.base->dim(), "hartogs base coordinate");
  require_dim(p.zeta.size(), H.N, "hartogs fiber coordinate");
  if (H.base->contains(p.z).status != Region::Interior)
    throw EvaluationError("h_value: base point not interior");
  KernelModel model(*H.base);
  double Ks = model.pow_eval(p.z, p.z, H.s).real();
  return p.zeta.squaredNorm() * Ks;
}

HartogsClass hartogs_contains(const HartogsDomain& H, const HartogsPoint& p, double tol) {
  require_dim(p.z.size(), H.base->dim(), "hartogs base coordinate");
  require_dim(p.zeta.size(), H.N, "hartogs fiber coordinate");
  Classification base = H.base->contains(p.z, tol);
  if (base.status == Region::Exterior) return {HartogsRegion::Exterior, 0.0, false};
  if (base.status == Region::Boundary) {
    if (p.zeta.norm() <= tol) return {HartogsRegion::BoundaryBase, 0.0, false};
    return {HartogsRegion::Exterior, 0.0, false};
  }
  double h = h_value(H, p);
  if (std::abs(h - 1.0) <= tol) return {HartogsRegion::Boundary0, h, true};
  if (h < 1.0) return {HartogsRegion::Interior, h, true};
  return {HartogsRegion::Exterior, h, true};
}

HartogsKernel::HartogsKernel(const HartogsDomain& H) : H_(H), base_(*H.base) {
  const int deg = H.base->dim();
  const int N = H.N;
  const double s = H.s;
  // b(x) = gamma(s x) is a polynomial of degree dim(D); interpolate it
  // at the arguments N..N+deg the Euler operator actually sees.
  std::vector<double> nodes(deg + 1), values(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    nodes[i] = N + i;
    values[i] = gamma_weight_ratio(*H.base, s * (N + i));
  }
  b_ = interpolate(nodes, values);
  for (int extra = 1; extra <= 4; ++extra) {
    double x = N + deg + extra;
    double want = gamma_weight_ratio(*H.base, s * x);
    double got = b_.eval(x);
    if (std::abs(got - want) > 1e-8 * std::max(1.0, std::abs(want)))
      throw EvaluationError(
          "hartogs kernel: no polynomial of degree dim(base) matches the weighted "
          "kernel ratio; base domain outside the supported catalog");
  }
  R_ = apply_euler_operator(b_, N, N + 1);
}

Complex HartogsKernel::eval(const CVector& p, const CVector& q) const {
  HartogsPoint pp = unpack_hartogs(H_, p);
  HartogsPoint qq = unpack_hartogs(H_, q);
  return eval(pp, qq);
}

Complex HartogsKernel::eval(const HartogsPoint& p, const HartogsPoint& q) const {
  require_dim(p.zeta.size(), H_.N, "hartogs fiber coordinate");
  require_dim(q.zeta.size(), H_.N, "hartogs fiber coordinate");
  Complex Ks = base_.pow_eval(p.z, q.z, H_.s);
  Complex tau = (q.zeta.adjoint() * p.zeta)(0, 0);  // <zeta, zeta'>
  Complex t = Ks * tau;
  if (std::abs(t) >= 1.0)
    throw EvaluationError("hartogs kernel: |t| >= 1, point pair outside the convergence region");
  Complex pref = base_.pow_eval(p.z, q.z, prefactor_exponent());
  double cN = std::tgamma(H_.N + 1.0) / std::pow(kPi, H_.N);
  return cN * pref * R_.eval(t);
}

CMatrix HartogsKernel::mixed_log_hessian(const HartogsPoint& p, const HartogsPoint& q) const {
  const int r = H_.base->dim();
  const int N = H_.N;
  const double s = H_.s;
  Complex Ks = base_.pow_eval(p.z, q.z, s);
  Complex tau = (q.zeta.adjoint() * p.zeta)(0, 0);
  Complex t = Ks * tau;
  if (std::abs(t) >= 1.0)
    throw EvaluationError("hartogs kernel: |t| >= 1, point pair outside the convergence region");
  Complex L = R_.dlog(t);
  Complex Q = R_.d2log(t);
  CVector g = base_.log_gradient_p(p.z, q.z);
  CVector gb = base_.log_gradient_qbar(p.z, q.z);
  CMatrix Hb = base_.mixed_log_hessian(p.z, q.z);

  CMatrix M = CMatrix::Zero(r + N, r + N);
  // z zbar' block
  M.topLeftCorner(r, r) =
      (s * N + 1.0 + s * t * L) * Hb + (Q * s * s * t * t + L * s * s * t) * (g * gb.transpose());
  // z zetabar' block: s K^s g_i zeta_b (L + tQ)
  for (int i = 0; i < r; ++i)
    for (int b = 0; b < N; ++b)
      M(i, r + b) = s * Ks * g[i] * p.zeta[b] * (L + t * Q);
  // zeta zbar' block: s K^s conj(zeta'_a) gb_j (L + tQ)
  for (int a = 0; a < N; ++a)
    for (int j = 0; j < r; ++j)
      M(r + a, j) = s * Ks * std::conj(q.zeta[a]) * gb[j] * (L + t * Q);
  // zeta zetabar' block
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      M(r + a, r + b) = Q * Ks * Ks * p.zeta[b] * std::conj(q.zeta[a]);
      if (a == b) M(r + a, r + b) += L * Ks;
    }
  return M;
}

Complex HartogsKernel::tumanov_r(const HartogsPoint& p, const HartogsPoint& q) const {
  return mixed_log_hessian(p, q).determinant();
}

SeriesResult hartogs_kernel_series(const HartogsDomain& H, const HartogsPoint& p,
                                   const HartogsPoint& q, int truncation, par::Exec exec) {
  const auto kind = H.base->kind();
  require(kind == Domain::Kind::Disc || kind == Domain::Kind::Ball,
          "hartogs_kernel_series: oracle needs a disc or ball base");
  const int m = H.base->dim();
  const int N = H.N;
  const double s = H.s;
  require_dim(p.z.size(), m, "series base coordinate");
  require_dim(q.z.size(), m, "series base coordinate");

  const Complex x = (q.z.adjoint() * p.z)(0, 0);      // <z, z'>
  const Complex tau = (q.zeta.adjoint() * p.zeta)(0, 0);
  const double ax = std::abs(x);
  require(ax < 1.0, "hartogs_kernel_series: base points too close to the sphere");

  const int J = truncation;
  const int Kmax = std::abs(tau) == 0.0 ? 0 : truncation;
  const double log_m_fact = std::lgamma(m + 1.0);
  const double log_pi = std::log(kPi);
  const double log_atau = std::abs(tau) == 0.0 ? 0.0 : std::log(std::abs(tau));
  const Complex tau_phase = std::abs(tau) == 0.0 ? Complex(1.0) : tau / std::abs(tau);

  // Row k: beta = (m+1) s (N+k); sum_j x^j Gamma(j+beta+m+1)/(j! Gamma(beta+1)),
  // with coefficient (N+k)!/k! (m!/pi^m)^{s(N+k)} / pi^{N+m}. The row
  // coefficient and |tau|^k are folded into the recurrence start in log
  // scale, which keeps individual terms near the magnitude they
  // contribute and avoids intermediate overflow at large k.
  auto log_coef = [&](int k) {
    return std::lgamma(N + k + 1.0) - std::lgamma(k + 1.0) +
           s * (N + k) * (log_m_fact - m * log_pi) - (N + m) * log_pi + k * log_atau;
  };
  auto row_value = [&](int k, double* row_tail) {
    const double beta = (m + 1) * s * (N + k);
    double log_start = log_coef(k);
    for (int i = 1; i <= m; ++i) log_start += std::log(beta + i);
    double rj = std::exp(log_start);  // scaled 1/B at j = 0
    Complex xj(1.0, 0.0);
    Complex sum(0.0);
    double last_mag = 0.0;
    for (int j = 0; j <= J; ++j) {
      sum += xj * rj;
      last_mag = std::abs(xj) * rj;
      xj *= x;
      rj *= (j + beta + m + 1.0) / (j + 1.0);
    }
    // Geometric bound past J when the term ratio has fallen below one;
    // otherwise the full closed-form row sum at |x| bounds the rest.
    double ratio = ax * (J + beta + m + 1.0) / (J + 1.0);
    double log_full = log_start - (beta + m + 1.0) * std::log1p(-ax);
    double full = std::exp(log_full);
    *row_tail = ratio < 1.0 ? std::min(last_mag * ratio / (1.0 - ratio), full) : full;
    return sum;
  };

  // Fixed-block summation. Each block sums its rows in index order; the
  // blocks are then pairwise-reduced in block order, so results match
  // bit for bit across thread counts.
  struct Partial {
    Complex sum{0.0, 0.0};
    double tail = 0.0;
    bool tail_finite = true;
    Partial operator+(const Partial& o) const {
      return {sum + o.sum, tail + o.tail, tail_finite && o.tail_finite};
    }
  };
  const std::size_t rows = static_cast<std::size_t>(Kmax) + 1;
  const std::size_t block = 16;
  auto partials = par::blocked_partials<Partial>(
      rows, block,
      [&](std::size_t, std::size_t lo, std::size_t hi) {
        Partial acc;
        for (std::size_t kk = lo; kk < hi; ++kk) {
          int k = static_cast<int>(kk);
          double row_tail = 0.0;
          Complex row = row_value(k, &row_tail);
          acc.sum += ipow(tau_phase, k) * row;
          acc.tail += row_tail;
          acc.tail_finite = acc.tail_finite && std::isfinite(row_tail);
        }
        return acc;
      },
      exec);
  Partial total = par::pairwise_reduce(partials, Partial{});

  // k-direction tail: ratio of consecutive scaled row magnitudes. Rows
  // whose magnitude has fallen below the roundoff floor of the sum are
  // already irrelevant; the ratio test only applies above that floor.
  double tail = total.tail;
  bool converged = total.tail_finite;
  if (Kmax > 0) {
    double row_tail_a = 0.0, row_tail_b = 0.0;
    double ta = std::abs(row_value(Kmax, &row_tail_a));
    double tb = std::abs(row_value(Kmax + 1, &row_tail_b));
    double negligible = 1e-14 * std::abs(total.sum);
    if (tb <= negligible) {
      tail += 100.0 * tb;
    } else if (ta > 0.0 && tb < ta) {
      tail += tb / (1.0 - tb / ta);
    } else {
      converged = false;
      tail = std::numeric_limits<double>::infinity();
    }
  }
  return {total.sum, tail, converged};
}

CVector pack_hartogs(const HartogsPoint& p) {
  CVector v(p.z.size() + p.zeta.size());
  v.head(p.z.size()) = p.z;
  v.tail(p.zeta.size()) = p.zeta;
  return v;
}

HartogsPoint unpack_hartogs(const HartogsDomain& H, const CVector& v) {
  require_dim(v.size(), H.base->dim() + H.N, "hartogs coordinates");
  return {v.head(H.base->dim()), v.tail(H.N)};
}

HartogsPoint sample_hartogs_interior(const HartogsDomain& H, Rng& rng, double rho_max) {
  CVector z = sample_interior(*H.base, rng);
  KernelModel model(*H.base);
  double radius = std::pow(model.pow_eval(z, z, H.s).real(), -0.5);
  double rho = rho_max * std::pow(rng.uniform(), 1.0 / (2.0 * H.N));
  return {z, rho * radius * rng.unit_vector(H.N)};
}

HartogsPoint sample_hartogs_boundary0(const HartogsDomain& H, Rng& rng) {
  CVector z = sample_interior(*H.base, rng);
  KernelModel model(*H.base);
  double radius = std::pow(model.pow_eval(z, z, H.s).real(), -0.5);
  return {z, radius * rng.unit_vector(H.N)};
}

HartogsPoint sample_hartogs_boundary_base(const HartogsDomain& H, Rng& rng) {
  CVector z = sample_boundary(*H.base, rng);
  return {z, CVector::Zero(H.N)};
}

}  // namespace hsd
