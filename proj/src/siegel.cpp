#include "hsd/siegel.hpp"

namespace hsd {

HermitianForm HermitianForm::empty(int n) {
  HermitianForm f;
  f.n = n;
  f.m = 0;
  f.H.assign(n, CMatrix::Zero(0, 0));
  return f;
}

HermitianForm HermitianForm::ball(int m) {
  HermitianForm f;
  f.n = 1;
  f.m = m;
  f.H.assign(1, CMatrix::Identity(m, m));
  return f;
}

void HermitianForm::validate() const {
  require(static_cast<int>(H.size()) == n, "form: need n component matrices");
  for (const auto& Hj : H) {
    require(Hj.rows() == m && Hj.cols() == m, "form: component matrix size mismatch");
    if (m > 0)
      require((Hj - Hj.adjoint()).cwiseAbs().maxCoeff() <= 1e-12,
              "form: component matrices must be Hermitian");
  }
}

CVector HermitianForm::eval(const CVector& u, const CVector& v) const {
  require_dim(u.size(), m, "form argument u");
  require_dim(v.size(), m, "form argument v");
  CVector out(n);
  for (int j = 0; j < n; ++j) out[j] = m == 0 ? Complex(0.0) : Complex(v.adjoint() * H[j] * u);
  return out;
}

RVector HermitianForm::eval_diag(const CVector& u) const {
  CVector f = eval(u, u);
  return f.real();
}

SiegelDomain make_half_plane() {
  SiegelDomain D;
  D.cone = Cone::half_line();
  D.form = HermitianForm::empty(1);
  D.n = 1;
  D.m = 0;
  return D;
}

SiegelDomain make_siegel_ball(int m) {
  require(m >= 1, "siegel_ball needs m >= 1");
  SiegelDomain D;
  D.cone = Cone::half_line();
  D.form = HermitianForm::ball(m);
  D.n = 1;
  D.m = m;
  return D;
}

SiegelDomain make_tube_over(ConePtr cone) {
  SiegelDomain D;
  D.n = cone->ambient_dim();
  D.cone = std::move(cone);
  D.form = HermitianForm::empty(D.n);
  D.m = 0;
  return D;
}

SiegelDomain make_siegel_product(const SiegelDomain& a, const SiegelDomain& b) {
  SiegelDomain D;
  D.cone = Cone::product({a.cone, b.cone});
  D.n = a.n + b.n;
  D.m = a.m + b.m;
  D.form.n = D.n;
  D.form.m = D.m;
  D.form.H.assign(D.n, CMatrix::Zero(D.m, D.m));
  for (int j = 0; j < a.n; ++j)
    D.form.H[j].topLeftCorner(a.m, a.m) = a.form.H[j];
  for (int j = 0; j < b.n; ++j)
    D.form.H[a.n + j].bottomRightCorner(b.m, b.m) = b.form.H[j];
  return D;
}

RVector siegel_defect(const SiegelDomain& D, const SiegelPoint& p) {
  require_dim(p.w.size(), D.n, "siegel point w");
  require_dim(p.u.size(), D.m, "siegel point u");
  return p.w.imag() - D.form.eval_diag(p.u);
}

Classification siegel_contains(const SiegelDomain& D, const SiegelPoint& p, double tol) {
  return D.cone->contains(siegel_defect(D, p), tol);
}

ShilovResult shilov_membership(const SiegelDomain& D, const SiegelPoint& p, double tol) {
  double r = siegel_defect(D, p).norm();
  return {r <= tol, r};
}

CVector pack_siegel(const SiegelPoint& p) {
  CVector z(p.w.size() + p.u.size());
  z.head(p.w.size()) = p.w;
  z.tail(p.u.size()) = p.u;
  return z;
}

SiegelPoint unpack_siegel(const SiegelDomain& D, const CVector& z) {
  require_dim(z.size(), D.n + D.m, "siegel coordinates");
  return {z.head(D.n), z.tail(D.m)};
}

}  // namespace hsd
