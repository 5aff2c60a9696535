#include "hsd/cones.hpp"

#include <cmath>
#include <limits>

namespace hsd {

ConePtr Cone::half_line() {
  return ConePtr(new Cone(ConeKind::HalfLine, 1, 0));
}

ConePtr Cone::lorentz(int n) {
  require(n >= 2, "lorentz cone needs n >= 2");
  return ConePtr(new Cone(ConeKind::Lorentz, n, n));
}

ConePtr Cone::pd_hermitian(int r) {
  require(r >= 1, "pd_hermitian cone needs r >= 1");
  return ConePtr(new Cone(ConeKind::PDHermitian, r * r, r));
}

ConePtr Cone::product(std::vector<ConePtr> factors) {
  require(!factors.empty(), "product cone needs at least one factor");
  int dim = 0;
  for (const auto& f : factors) dim += f->ambient_dim();
  auto c = new Cone(ConeKind::Product, dim, 0);
  c->factors_ = std::move(factors);
  return ConePtr(c);
}

RVector flatten_hermitian(const CMatrix& X) {
  const int r = static_cast<int>(X.rows());
  require(X.cols() == r, "flatten_hermitian: matrix must be square");
  RVector out(r * r);
  int a = 0;
  for (int i = 0; i < r; ++i) {
    out[a++] = X(i, i).real();
    for (int j = i + 1; j < r; ++j) {
      out[a++] = X(i, j).real();
      out[a++] = X(i, j).imag();
    }
  }
  return out;
}

CMatrix unflatten_hermitian(const RVector& x, int r) {
  require_dim(x.size(), static_cast<Eigen::Index>(r) * r, "hermitian coordinates");
  CMatrix X(r, r);
  int a = 0;
  for (int i = 0; i < r; ++i) {
    X(i, i) = x[a++];
    for (int j = i + 1; j < r; ++j) {
      double re = x[a++];
      double im = x[a++];
      X(i, j) = Complex(re, im);
      X(j, i) = Complex(re, -im);
    }
  }
  return X;
}

CMatrix hermitian_basis_matrix(int r, int a) {
  RVector e = RVector::Zero(r * r);
  e[a] = 1.0;
  return unflatten_hermitian(e, r);
}

double Cone::defect(const RVector& x) const {
  require_dim(x.size(), ambient_dim_, "cone point");
  switch (kind_) {
    case ConeKind::HalfLine:
      return x[0];
    case ConeKind::Lorentz: {
      double tail = x.tail(ambient_dim_ - 1).norm();
      return x[0] - tail;
    }
    case ConeKind::PDHermitian: {
      CMatrix X = unflatten_hermitian(x, param_);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(X, Eigen::EigenvaluesOnly);
      return es.eigenvalues().minCoeff();
    }
    case ConeKind::Product: {
      double d = std::numeric_limits<double>::infinity();
      int off = 0;
      for (const auto& f : factors_) {
        d = std::min(d, f->defect(x.segment(off, f->ambient_dim())));
        off += f->ambient_dim();
      }
      return d;
    }
  }
  return 0.0;
}

Classification Cone::contains(const RVector& x, double tol) const {
  return classify(defect(x), tol);
}

std::string Cone::describe() const {
  switch (kind_) {
    case ConeKind::HalfLine:
      return "half_line";
    case ConeKind::Lorentz:
      return "lorentz(" + std::to_string(param_) + ")";
    case ConeKind::PDHermitian:
      return "pd_hermitian(" + std::to_string(param_) + ")";
    case ConeKind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += factors_[i]->describe();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

RMatrix lorentz_boost(int n, double rapidity, int axis) {
  require(axis >= 1 && axis <= n - 1, "lorentz boost axis out of range");
  RMatrix A = RMatrix::Identity(n, n);
  double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  A(0, 0) = ch;
  A(0, axis) = sh;
  A(axis, 0) = sh;
  A(axis, axis) = ch;
  return A;
}

/// Boost along the spatial unit vector omega with the given rapidity.
RMatrix lorentz_boost_dir(int n, double rapidity, const RVector& omega) {
  RMatrix A = RMatrix::Identity(n, n);
  double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  A(0, 0) = ch;
  for (int i = 1; i < n; ++i) {
    A(0, i) = sh * omega[i - 1];
    A(i, 0) = sh * omega[i - 1];
    for (int j = 1; j < n; ++j)
      A(i, j) += (ch - 1.0) * omega[i - 1] * omega[j - 1];
  }
  return A;
}

/// Real matrix of X -> g X g^* on the flattened coordinates.
RMatrix congruence_matrix(const CMatrix& g) {
  const int r = static_cast<int>(g.rows());
  require(g.cols() == r, "congruence: g must be square");
  require(std::abs(g.determinant()) > 1e-14, "congruence: g must be invertible");
  const int n = r * r;
  RMatrix A(n, n);
  for (int a = 0; a < n; ++a) {
    CMatrix S = hermitian_basis_matrix(r, a);
    A.col(a) = flatten_hermitian(g * S * g.adjoint());
  }
  return A;
}

}  // namespace

RMatrix cone_linear_aut(const Cone& cone, const ConeAutParams& params) {
  switch (cone.kind()) {
    case ConeKind::HalfLine: {
      const auto* p = std::get_if<HalfLineAutParams>(&params.v);
      require(p != nullptr, "half-line cone expects HalfLineAutParams");
      require(p->lambda > 0.0, "half-line scaling must be positive");
      RMatrix A(1, 1);
      A(0, 0) = p->lambda;
      return A;
    }
    case ConeKind::Lorentz: {
      const auto* p = std::get_if<LorentzAutParams>(&params.v);
      require(p != nullptr, "lorentz cone expects LorentzAutParams");
      require(p->scale > 0.0, "lorentz scale must be positive");
      const int n = cone.lorentz_n();
      RMatrix A = lorentz_boost(n, p->rapidity, p->boost_axis);
      if (n >= 3 && p->rotation != 0.0) {
        RMatrix R = RMatrix::Identity(n, n);
        double c = std::cos(p->rotation), s = std::sin(p->rotation);
        R(1, 1) = c;
        R(1, 2) = -s;
        R(2, 1) = s;
        R(2, 2) = c;
        A = A * R;
      }
      return p->scale * A;
    }
    case ConeKind::PDHermitian: {
      const auto* p = std::get_if<PDHermitianAutParams>(&params.v);
      require(p != nullptr, "pd_hermitian cone expects PDHermitianAutParams");
      require(p->g.rows() == cone.hermitian_r() && p->g.cols() == cone.hermitian_r(),
              "pd_hermitian aut: g has wrong size");
      return congruence_matrix(p->g);
    }
    case ConeKind::Product: {
      const auto* p = std::get_if<ProductAutParams>(&params.v);
      require(p != nullptr, "product cone expects ProductAutParams");
      require(p->factors.size() == cone.factors().size(),
              "product aut: wrong number of factor parameters");
      RMatrix A = RMatrix::Zero(cone.ambient_dim(), cone.ambient_dim());
      int off = 0;
      for (std::size_t i = 0; i < cone.factors().size(); ++i) {
        const Cone& f = *cone.factors()[i];
        RMatrix Ai = cone_linear_aut(f, p->factors[i]);
        A.block(off, off, f.ambient_dim(), f.ambient_dim()) = Ai;
        off += f.ambient_dim();
      }
      return A;
    }
  }
  throw std::logic_error("unreachable cone kind");
}

RMatrix cone_transitive_map(const Cone& cone, const RVector& x, const RVector& y,
                            double tol) {
  require(cone.contains(x, tol).status == Region::Interior,
          "cone_transitive_map: x must be interior");
  require(cone.contains(y, tol).status == Region::Interior,
          "cone_transitive_map: y must be interior");
  switch (cone.kind()) {
    case ConeKind::HalfLine: {
      RMatrix A(1, 1);
      A(0, 0) = y[0] / x[0];
      return A;
    }
    case ConeKind::Lorentz: {
      // L_x maps sqrt(q(x)) e to x; then A = L_y diag-scale L_x^{-1}.
      const int n = cone.lorentz_n();
      auto to_axis = [n](const RVector& v) {
        double q = v[0] * v[0] - v.tail(n - 1).squaredNorm();
        double rho = std::sqrt(q);
        double tail = v.tail(n - 1).norm();
        if (tail < 1e-300) return RMatrix(RMatrix::Identity(n, n));
        RVector omega = v.tail(n - 1) / tail;
        double rapidity = std::acosh(v[0] / rho);
        return lorentz_boost_dir(n, rapidity, omega);
      };
      double qx = x[0] * x[0] - x.tail(n - 1).squaredNorm();
      double qy = y[0] * y[0] - y.tail(n - 1).squaredNorm();
      double lambda = std::sqrt(qy / qx);
      RMatrix Lx = to_axis(x);
      RMatrix Ly = to_axis(y);
      return Ly * (lambda * RMatrix::Identity(n, n)) * Lx.inverse();
    }
    case ConeKind::PDHermitian: {
      const int r = cone.hermitian_r();
      CMatrix X = unflatten_hermitian(x, r);
      CMatrix Y = unflatten_hermitian(y, r);
      Eigen::SelfAdjointEigenSolver<CMatrix> ex(X), ey(Y);
      CMatrix xinv_sqrt = ex.operatorInverseSqrt();
      CMatrix y_sqrt = ey.operatorSqrt();
      return congruence_matrix(y_sqrt * xinv_sqrt);
    }
    case ConeKind::Product: {
      RMatrix A = RMatrix::Zero(cone.ambient_dim(), cone.ambient_dim());
      int off = 0;
      for (const auto& f : cone.factors()) {
        int d = f->ambient_dim();
        A.block(off, off, d, d) =
            cone_transitive_map(*f, x.segment(off, d), y.segment(off, d), tol);
        off += d;
      }
      return A;
    }
  }
  throw std::logic_error("unreachable cone kind");
}

}  // namespace hsd
