#include "hsd/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hsd {

DomainPtr Domain::disc() {
  auto d = new Domain();
  d->kind_ = Kind::Disc;
  d->dim_ = 1;
  d->bounded_ = true;
  return DomainPtr(d);
}

DomainPtr Domain::ball(int m) {
  require(m >= 1, "ball needs m >= 1");
  auto d = new Domain();
  d->kind_ = Kind::Ball;
  d->dim_ = m;
  d->ball_m_ = m;
  d->bounded_ = true;
  return DomainPtr(d);
}

DomainPtr Domain::siegel(SiegelDomain D) {
  D.form.validate();
  require(D.form.n == D.cone->ambient_dim() && D.form.n == D.n,
          "siegel domain: form.n must match the cone dimension");
  require(D.form.m == D.m, "siegel domain: form.m must match the fiber dimension");
  auto d = new Domain();
  d->kind_ = Kind::Siegel;
  d->dim_ = D.n + D.m;
  d->bounded_ = false;
  d->siegel_ = std::move(D);
  return DomainPtr(d);
}

DomainPtr Domain::product(std::vector<DomainPtr> factors) {
  require(factors.size() >= 2, "product needs at least two factors");
  auto d = new Domain();
  d->kind_ = Kind::Product;
  d->dim_ = 0;
  d->bounded_ = true;
  for (const auto& f : factors) {
    d->dim_ += f->dim();
    d->bounded_ = d->bounded_ && f->bounded();
  }
  d->factors_ = std::move(factors);
  return DomainPtr(d);
}

Classification Domain::contains(const CVector& z, double tol) const {
  require_dim(z.size(), dim_, "domain point");
  switch (kind_) {
    case Kind::Disc:
    case Kind::Ball:
      return classify(1.0 - z.squaredNorm(), tol);
    case Kind::Siegel:
      return siegel_contains(*siegel_, unpack_siegel(*siegel_, z), tol);
    case Kind::Product: {
      double defect = std::numeric_limits<double>::infinity();
      int off = 0;
      for (const auto& f : factors_) {
        defect = std::min(defect, f->contains(z.segment(off, f->dim()), tol).defect);
        off += f->dim();
      }
      return classify(defect, tol);
    }
  }
  throw std::logic_error("unreachable domain kind");
}

std::string Domain::describe() const {
  switch (kind_) {
    case Kind::Disc:
      return "disc";
    case Kind::Ball:
      return "ball(" + std::to_string(ball_m_) + ")";
    case Kind::Siegel: {
      const auto& S = *siegel_;
      if (S.m == 0 && S.cone->kind() == ConeKind::HalfLine) return "half_plane";
      if (S.m >= 1 && S.n == 1 && S.cone->kind() == ConeKind::HalfLine)
        return "siegel_ball(" + std::to_string(S.m) + ")";
      if (S.m == 0) return "tube(" + S.cone->describe() + ")";
      return "siegel(" + S.cone->describe() + ",m=" + std::to_string(S.m) + ")";
    }
    case Kind::Product: {
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

RVector sample_cone_interior(const Cone& V, Rng& rng) {
  switch (V.kind()) {
    case ConeKind::HalfLine: {
      RVector x(1);
      x[0] = rng.uniform(0.2, 2.5);
      return x;
    }
    case ConeKind::Lorentz: {
      const int n = V.lorentz_n();
      RVector x = rng.real_gaussian(n, 0.5);
      x[0] = x.tail(n - 1).norm() + rng.uniform(0.2, 2.0);
      return x;
    }
    case ConeKind::PDHermitian: {
      const int r = V.hermitian_r();
      CMatrix g(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g(i, j) = 0.6 * rng.complex_normal();
      CMatrix X = g * g.adjoint() + rng.uniform(0.2, 1.0) * CMatrix::Identity(r, r);
      return flatten_hermitian(X);
    }
    case ConeKind::Product: {
      RVector x(V.ambient_dim());
      int off = 0;
      for (const auto& f : V.factors()) {
        x.segment(off, f->ambient_dim()) = sample_cone_interior(*f, rng);
        off += f->ambient_dim();
      }
      return x;
    }
  }
  throw std::logic_error("unreachable cone kind");
}

RVector sample_cone_boundary(const Cone& V, Rng& rng) {
  switch (V.kind()) {
    case ConeKind::HalfLine:
      return RVector::Zero(1);
    case ConeKind::Lorentz: {
      const int n = V.lorentz_n();
      RVector x = rng.real_gaussian(n, 1.0);
      double tail = x.tail(n - 1).norm();
      if (tail < 1e-9) {
        x[1] = 1.0;
        tail = 1.0;
      }
      x[0] = tail;
      return x;
    }
    case ConeKind::PDHermitian: {
      const int r = V.hermitian_r();
      // Rank-deficient PSD matrix: Q diag(lambda_1..lambda_{r-1}, 0) Q^*.
      CMatrix g(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g(i, j) = rng.complex_normal();
      Eigen::HouseholderQR<CMatrix> qr(g);
      CMatrix Q = qr.householderQ();
      RVector lam(r);
      for (int i = 0; i < r - 1; ++i) lam[i] = rng.uniform(0.3, 2.0);
      lam[r - 1] = 0.0;
      CMatrix X = Q * lam.asDiagonal() * Q.adjoint();
      return flatten_hermitian((X + X.adjoint()) / 2.0);
    }
    case ConeKind::Product: {
      // All factors in the closure, at least one on the boundary.
      RVector x(V.ambient_dim());
      int off = 0;
      std::size_t bidx = static_cast<std::size_t>(rng.uniform() * double(V.factors().size()));
      bidx = std::min(bidx, V.factors().size() - 1);
      for (std::size_t i = 0; i < V.factors().size(); ++i) {
        const auto& f = V.factors()[i];
        x.segment(off, f->ambient_dim()) =
            (i == bidx) ? sample_cone_boundary(*f, rng) : sample_cone_interior(*f, rng);
        off += f->ambient_dim();
      }
      return x;
    }
  }
  throw std::logic_error("unreachable cone kind");
}

CVector sample_interior(const Domain& D, Rng& rng) {
  switch (D.kind()) {
    case Domain::Kind::Disc:
    case Domain::Kind::Ball: {
      const int m = D.dim();
      // Direction times a radius kept away from the unit sphere.
      CVector v = rng.unit_vector(m);
      double r = 0.75 * std::pow(rng.uniform(), 1.0 / (2.0 * m));
      return r * v;
    }
    case Domain::Kind::Siegel: {
      const auto& S = D.siegel_data();
      CVector u = rng.complex_gaussian(S.m, 0.4);
      RVector y = S.form.eval_diag(u) + sample_cone_interior(*S.cone, rng);
      CVector w(S.n);
      for (int j = 0; j < S.n; ++j) w[j] = Complex(rng.uniform(-1.0, 1.0), y[j]);
      return pack_siegel({w, u});
    }
    case Domain::Kind::Product: {
      CVector z(D.dim());
      int off = 0;
      for (const auto& f : D.factors()) {
        z.segment(off, f->dim()) = sample_interior(*f, rng);
        off += f->dim();
      }
      return z;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

SiegelPoint sample_shilov(const SiegelDomain& D, Rng& rng) {
  CVector u = rng.complex_gaussian(D.m, 0.5);
  RVector y = D.form.eval_diag(u);
  CVector w(D.n);
  for (int j = 0; j < D.n; ++j) w[j] = Complex(rng.uniform(-1.0, 1.0), y[j]);
  return {w, u};
}

CVector sample_boundary(const Domain& D, Rng& rng) {
  switch (D.kind()) {
    case Domain::Kind::Disc:
    case Domain::Kind::Ball:
      return rng.unit_vector(D.dim());
    case Domain::Kind::Siegel: {
      const auto& S = D.siegel_data();
      CVector u = rng.complex_gaussian(S.m, 0.4);
      RVector y = S.form.eval_diag(u) + sample_cone_boundary(*S.cone, rng);
      CVector w(S.n);
      for (int j = 0; j < S.n; ++j) w[j] = Complex(rng.uniform(-1.0, 1.0), y[j]);
      return pack_siegel({w, u});
    }
    case Domain::Kind::Product: {
      CVector z(D.dim());
      int off = 0;
      std::size_t bidx = static_cast<std::size_t>(rng.uniform() * double(D.factors().size()));
      bidx = std::min(bidx, D.factors().size() - 1);
      for (std::size_t i = 0; i < D.factors().size(); ++i) {
        const auto& f = D.factors()[i];
        z.segment(off, f->dim()) =
            (i == bidx) ? sample_boundary(*f, rng) : sample_interior(*f, rng);
        off += f->dim();
      }
      return z;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

}  // namespace hsd
