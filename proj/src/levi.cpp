#include "hsd/levi.hpp"

#include <cmath>
#include <limits>

namespace hsd {

namespace {

double rho_value(const KernelModel& base, const HartogsDomain& H, const CVector& z,
                 const CVector& zeta) {
  double Kms = base.pow_eval(z, z, -H.s).real();
  return zeta.squaredNorm() - Kms;
}

}  // namespace

DefiningJet defining_jet(const HartogsDomain& H, const HartogsPoint& p) {
  const int r = H.base->dim();
  const int N = H.N;
  require_dim(p.z.size(), r, "defining_jet base coordinate");
  require_dim(p.zeta.size(), N, "defining_jet fiber coordinate");
  if (H.base->contains(p.z).status != Region::Interior)
    throw EvaluationError("defining_jet: base jet unavailable off the interior");
  KernelModel base(*H.base);
  const double s = H.s;
  double Kms = base.pow_eval(p.z, p.z, -s).real();  // K^{-s}
  CVector g = base.log_gradient_p(p.z, p.z);
  CMatrix Hess = base.mixed_log_hessian(p.z, p.z);

  DefiningJet jet;
  jet.rho = p.zeta.squaredNorm() - Kms;
  jet.d_rho = CVector::Zero(r + N);
  jet.d_rho.head(r) = s * Kms * g;
  jet.d_rho.tail(N) = p.zeta.conjugate();
  jet.levi = CMatrix::Zero(r + N, r + N);
  jet.levi.topLeftCorner(r, r) =
      s * Kms * Hess - (s * s * Kms) * (g * g.adjoint());
  jet.levi.bottomRightCorner(N, N) = CMatrix::Identity(N, N);
  return jet;
}

CMatrix tangent_basis(const DefiningJet& jet) {
  const int d = static_cast<int>(jet.d_rho.size());
  double norm = jet.d_rho.norm();
  if (norm < 1e-12)
    throw EvaluationError("tangent_basis: d rho vanishes; not a smooth stratum point");
  // The annihilator { V : sum_i (d rho)_i V_i = 0 } is the Hermitian
  // orthogonal complement of conj(d rho).
  CVector normal = jet.d_rho.conjugate() / norm;
  Eigen::HouseholderQR<CMatrix> qr(normal);
  CMatrix Q = qr.householderQ();
  return Q.rightCols(d - 1);
}

CMatrix levi_fd_hessian(const HartogsDomain& H, const HartogsPoint& p, double step) {
  const int r = H.base->dim();
  const int N = H.N;
  const int d = r + N;
  KernelModel base(*H.base);
  auto rho = [&](const CVector& v) {
    return rho_value(base, H, v.head(r), v.tail(N));
  };
  CVector v0 = pack_hartogs(p);
  // d^2 rho / dz_i dzbar_j = 1/4 [ (D_xx + D_yy) + i (D_xy - D_yx) ]
  // via central differences in the underlying real coordinates.
  CMatrix out(d, d);
  auto d2 = [&](int i, int ui, int j, int uj) {
    // ui, uj: 0 = real part, 1 = imaginary part direction
    CVector e_i = CVector::Zero(d), e_j = CVector::Zero(d);
    e_i[i] = ui == 0 ? Complex(1, 0) : Complex(0, 1);
    e_j[j] = uj == 0 ? Complex(1, 0) : Complex(0, 1);
    double pp = rho(v0 + step * e_i + step * e_j);
    double pm = rho(v0 + step * e_i - step * e_j);
    double mp = rho(v0 - step * e_i + step * e_j);
    double mm = rho(v0 - step * e_i - step * e_j);
    return (pp - pm - mp + mm) / (4.0 * step * step);
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double dxx = d2(i, 0, j, 0);
      double dyy = d2(i, 1, j, 1);
      double dxy = d2(i, 0, j, 1);
      double dyx = d2(i, 1, j, 0);
      out(i, j) = 0.25 * Complex(dxx + dyy, dxy - dyx);
    }
  return out;
}

LeviReport levi_certificate(const HartogsDomain& H, const HartogsPoint& p, double tol) {
  HartogsClass cls = hartogs_contains(H, p, 1e-6);
  if (cls.status != HartogsRegion::Boundary0)
    throw EvaluationError("levi_certificate: point is not on the partial_0 stratum");
  const int r = H.base->dim();
  const int N = H.N;
  DefiningJet jet = defining_jet(H, p);
  CMatrix T = tangent_basis(jet);
  // levi(i,j) = d_i dbar_j rho, so the quadratic form is V^T L conj(V);
  // in tangent coordinates that is the Hermitian matrix T^T L conj(T).
  CMatrix restricted = T.transpose() * jet.levi * T.conjugate();
  restricted = (restricted + restricted.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(restricted, Eigen::EigenvaluesOnly);

  LeviReport rep;
  rep.point = p;
  rep.tangent = T;
  rep.min_eig = es.eigenvalues().minCoeff();

  // Boundary identity check on the tangent columns.
  KernelModel base(*H.base);
  double Kms = base.pow_eval(p.z, p.z, -H.s).real();
  CMatrix Hess = base.mixed_log_hessian(p.z, p.z);
  double z2 = p.zeta.squaredNorm();
  double worst = 0.0;
  for (int c = 0; c < T.cols(); ++c) {
    CVector X = T.col(c).head(r);
    CVector Y = T.col(c).tail(N);
    Complex quad = (T.col(c).transpose() * jet.levi * T.col(c).conjugate())(0, 0);
    Complex pair = (p.zeta.adjoint() * Y)(0, 0);  // <Y, zeta>
    double closed =
        H.s * Kms * (X.transpose() * Hess * X.conjugate())(0, 0).real() +
        (Y.squaredNorm() * z2 - std::norm(pair)) / z2;
    worst = std::max(worst, std::abs(quad.real() - closed) / std::max(1.0, std::abs(closed)));
  }
  rep.closed_form_residual = worst;

  CMatrix fd = levi_fd_hessian(H, p);
  double scale = jet.levi.cwiseAbs().maxCoeff();
  rep.fd_residual = (fd - jet.levi).cwiseAbs().maxCoeff() / std::max(1.0, scale);
  rep.strongly_pseudoconvex = rep.min_eig > 0.0 && rep.closed_form_residual <= tol;
  return rep;
}

std::vector<LeviReport> levi_batch(const HartogsDomain& H, int count, std::uint64_t seed,
                                   par::Exec exec, bool with_fd) {
  std::vector<LeviReport> out(count);
  par::blocked_partials<int>(
      static_cast<std::size_t>(count), 8,
      [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          Rng rng(seed, i);
          HartogsPoint p = sample_hartogs_boundary0(H, rng);
          try {
            if (with_fd) {
              out[i] = levi_certificate(H, p);
            } else {
              DefiningJet jet = defining_jet(H, p);
              CMatrix T = tangent_basis(jet);
              CMatrix restricted = T.transpose() * jet.levi * T.conjugate();
              restricted = (restricted + restricted.adjoint()) / 2.0;
              Eigen::SelfAdjointEigenSolver<CMatrix> es(restricted, Eigen::EigenvaluesOnly);
              out[i] = LeviReport{p, T, es.eigenvalues().minCoeff(), 0.0, 0.0, false};
              out[i].strongly_pseudoconvex = out[i].min_eig > 0.0;
            }
          } catch (const std::exception&) {
            // A failed certificate must not escape the parallel region;
            // NaN fields fail every downstream threshold.
            double nan = std::numeric_limits<double>::quiet_NaN();
            out[i] = LeviReport{p, CMatrix(), nan, nan, nan, false};
          }
        }
        return 0;
      },
      exec);
  return out;
}

}  // namespace hsd
