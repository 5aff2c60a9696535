#include "hsd/automorphisms.hpp"

#include <cmath>
#include <functional>
#include <numeric>

namespace hsd {

namespace {

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

/// Principal power; constants may sit on the cut (arg = pi), which is a
/// valid fixed choice since nothing varies.
Complex principal_pow(Complex g, double e) {
  if (g == Complex(0.0)) throw EvaluationError("principal_pow: zero base");
  return std::exp(e * std::log(g));
}

Complex phase(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

bool same_domain(const DomainPtr& a, const DomainPtr& b) {
  return a && b && a->dim() == b->dim() && a->describe() == b->describe();
}

}  // namespace

BaseMapPtr BaseMap::identity(DomainPtr D) {
  auto m = new BaseMap();
  m->kind_ = Kind::Identity;
  m->src_ = D;
  m->dst_ = std::move(D);
  return BaseMapPtr(m);
}

BaseMapPtr BaseMap::mobius(MobiusParams p) {
  require(std::abs(p.a) < 1.0, "mobius: |a| < 1 required");
  auto m = new BaseMap();
  m->kind_ = Kind::Mobius;
  m->mob_ = p;
  m->mob_.theta = wrap_angle(p.theta);
  m->src_ = Domain::disc();
  m->dst_ = Domain::disc();
  return BaseMapPtr(m);
}

BaseMapPtr BaseMap::cayley(CayleyKind kind, int ball_m) {
  require(ball_m >= 1, "cayley: ball dimension >= 1");
  auto m = new BaseMap();
  m->kind_ = Kind::Cayley;
  m->cay_ = kind;
  m->cayley_m_ = ball_m;
  switch (kind) {
    case CayleyKind::DiscToHalfPlane:
      m->src_ = Domain::disc();
      m->dst_ = Domain::half_plane();
      m->cayley_m_ = 1;
      break;
    case CayleyKind::HalfPlaneToDisc:
      m->src_ = Domain::half_plane();
      m->dst_ = Domain::disc();
      m->cayley_m_ = 1;
      break;
    case CayleyKind::BallToSiegelBall:
      require(ball_m >= 2, "cayley: use DiscToHalfPlane for m = 1");
      m->src_ = Domain::ball(ball_m);
      m->dst_ = Domain::siegel_ball(ball_m - 1);
      break;
    case CayleyKind::SiegelBallToBall:
      require(ball_m >= 2, "cayley: use HalfPlaneToDisc for m = 1");
      m->src_ = Domain::siegel_ball(ball_m - 1);
      m->dst_ = Domain::ball(ball_m);
      break;
  }
  return BaseMapPtr(m);
}

BaseMapPtr BaseMap::affine_siegel(DomainPtr src, DomainPtr dst, AffineSiegelParams p) {
  require(src->kind() == Domain::Kind::Siegel && dst->kind() == Domain::Kind::Siegel,
          "affine_siegel: endpoints must be Siegel domains");
  const auto& S = src->siegel_data();
  const auto& T = dst->siegel_data();
  require(p.A.rows() == T.n && p.A.cols() == S.n, "affine_siegel: A size mismatch");
  require(p.B.rows() == T.m && p.B.cols() == S.m, "affine_siegel: B size mismatch");
  require(p.a.size() == T.n && p.c.size() == T.m, "affine_siegel: translation size mismatch");
  require(std::abs(p.A.determinant()) > 1e-14, "affine_siegel: A must be invertible");
  if (S.m > 0)
    require(std::abs(p.B.determinant()) > 1e-14, "affine_siegel: B must be invertible");
  // Compatibility spot check A F(u,v) = F'(Bu, Bv).
  Rng rng(20240901u);
  for (int trial = 0; trial < 8; ++trial) {
    CVector u = rng.complex_gaussian(S.m);
    CVector v = rng.complex_gaussian(S.m);
    CVector lhs = p.A * S.form.eval(u, v);
    CVector rhs = T.form.eval(p.B * u, p.B * v);
    require((lhs - rhs).norm() <= 1e-8 * (1.0 + lhs.norm()),
            "affine_siegel: A F(u,v) != F'(Bu,Bv)");
  }
  auto m = new BaseMap();
  m->kind_ = Kind::AffineSiegel;
  m->aff_ = std::move(p);
  m->src_ = std::move(src);
  m->dst_ = std::move(dst);
  return BaseMapPtr(m);
}

BaseMapPtr BaseMap::product_map(std::vector<BaseMapPtr> parts) {
  require(parts.size() >= 2, "product_map: need at least two parts");
  std::vector<DomainPtr> srcs, dsts;
  for (const auto& p : parts) {
    srcs.push_back(p->src());
    dsts.push_back(p->dst());
  }
  auto m = new BaseMap();
  m->kind_ = Kind::ProductMap;
  m->src_ = Domain::product(srcs);
  m->dst_ = Domain::product(dsts);
  m->parts_ = std::move(parts);
  return BaseMapPtr(m);
}

BaseMapPtr BaseMap::chain(std::vector<BaseMapPtr> parts) {
  require(!parts.empty(), "chain: need at least one part");
  for (std::size_t i = 1; i < parts.size(); ++i)
    require(same_domain(parts[i - 1]->dst(), parts[i]->src()),
            "chain: consecutive maps do not compose");
  if (parts.size() == 1) return parts[0];
  auto m = new BaseMap();
  m->kind_ = Kind::Chain;
  m->src_ = parts.front()->src();
  m->dst_ = parts.back()->dst();
  m->parts_ = std::move(parts);
  return BaseMapPtr(m);
}

CVector BaseMap::apply(const CVector& z) const {
  require_dim(z.size(), src_->dim(), "map argument");
  switch (kind_) {
    case Kind::Identity:
      return z;
    case Kind::Mobius: {
      CVector out(1);
      out[0] = phase(mob_.theta) * (z[0] - mob_.a) / (1.0 - std::conj(mob_.a) * z[0]);
      return out;
    }
    case Kind::Cayley: {
      const Complex i(0.0, 1.0);
      switch (cay_) {
        case CayleyKind::DiscToHalfPlane: {
          CVector out(1);
          out[0] = i * (1.0 + z[0]) / (1.0 - z[0]);
          return out;
        }
        case CayleyKind::HalfPlaneToDisc: {
          CVector out(1);
          out[0] = (z[0] - i) / (z[0] + i);
          return out;
        }
        case CayleyKind::BallToSiegelBall: {
          CVector out(cayley_m_);
          Complex d = 1.0 - z[0];
          out[0] = i * (1.0 + z[0]) / d;
          for (int a = 1; a < cayley_m_; ++a) out[a] = z[a] / d;
          return out;
        }
        case CayleyKind::SiegelBallToBall: {
          CVector out(cayley_m_);
          Complex d = z[0] + i;
          out[0] = (z[0] - i) / d;
          for (int a = 1; a < cayley_m_; ++a) out[a] = 2.0 * i * z[a] / d;
          return out;
        }
      }
      throw std::logic_error("unreachable cayley kind");
    }
    case Kind::AffineSiegel: {
      const auto& S = src_->siegel_data();
      const auto& T = dst_->siegel_data();
      SiegelPoint pt = unpack_siegel(S, z);
      CVector u2 = T.m > 0 ? CVector(aff_.B * pt.u + aff_.c) : CVector(0);
      CVector w2 = aff_.A * pt.w;
      for (int j = 0; j < T.n; ++j) w2[j] += aff_.a[j];
      if (T.m > 0) {
        CVector f1 = T.form.eval(aff_.B * pt.u, aff_.c);
        CVector f2 = T.form.eval(aff_.c, aff_.c);
        const Complex i(0.0, 1.0);
        w2 += 2.0 * i * f1 + i * f2;
      }
      return pack_siegel({w2, u2});
    }
    case Kind::ProductMap: {
      CVector out(dst_->dim());
      int so = 0, to = 0;
      for (const auto& p : parts_) {
        out.segment(to, p->dst()->dim()) = p->apply(z.segment(so, p->src()->dim()));
        so += p->src()->dim();
        to += p->dst()->dim();
      }
      return out;
    }
    case Kind::Chain: {
      CVector cur = z;
      for (const auto& p : parts_) cur = p->apply(cur);
      return cur;
    }
  }
  throw std::logic_error("unreachable map kind");
}

Complex BaseMap::jacobian(const CVector& z) const {
  switch (kind_) {
    case Kind::Identity:
      return Complex(1.0);
    case Kind::Mobius: {
      Complex d = 1.0 - std::conj(mob_.a) * z[0];
      return phase(mob_.theta) * (1.0 - std::norm(mob_.a)) / (d * d);
    }
    case Kind::Cayley: {
      const Complex i(0.0, 1.0);
      switch (cay_) {
        case CayleyKind::DiscToHalfPlane: {
          Complex d = 1.0 - z[0];
          return 2.0 * i / (d * d);
        }
        case CayleyKind::HalfPlaneToDisc: {
          Complex d = z[0] + i;
          return 2.0 * i / (d * d);
        }
        case CayleyKind::BallToSiegelBall:
          return 2.0 * i * principal_pow(1.0 - z[0], -(cayley_m_ + 1.0));
        case CayleyKind::SiegelBallToBall:
          return principal_pow(2.0 * i, static_cast<double>(cayley_m_)) *
                 principal_pow(z[0] + i, -(cayley_m_ + 1.0));
      }
      throw std::logic_error("unreachable cayley kind");
    }
    case Kind::AffineSiegel:
      return aff_.A.determinant() * aff_.B.determinant();
    case Kind::ProductMap: {
      Complex j(1.0);
      int so = 0;
      for (const auto& p : parts_) {
        j *= p->jacobian(z.segment(so, p->src()->dim()));
        so += p->src()->dim();
      }
      return j;
    }
    case Kind::Chain: {
      Complex j(1.0);
      CVector cur = z;
      for (const auto& p : parts_) {
        j *= p->jacobian(cur);
        cur = p->apply(cur);
      }
      return j;
    }
  }
  throw std::logic_error("unreachable map kind");
}

Complex BaseMap::jacobian_power(const CVector& z, double s) const {
  switch (kind_) {
    case Kind::Identity:
      return Complex(1.0);
    case Kind::Mobius: {
      // e^{i theta s} (1-|a|^2)^s (1 - conj(a) z)^{-2s}; the base of the
      // principal power has positive real part on the disc, so the cut
      // is never reached.
      Complex d = 1.0 - std::conj(mob_.a) * z[0];
      return phase(mob_.theta * s) * std::pow(1.0 - std::norm(mob_.a), s) *
             principal_pow(d, -2.0 * s);
    }
    case Kind::Cayley: {
      const Complex i(0.0, 1.0);
      switch (cay_) {
        case CayleyKind::DiscToHalfPlane:
          return principal_pow(2.0 * i, s) * principal_pow(1.0 - z[0], -2.0 * s);
        case CayleyKind::HalfPlaneToDisc:
          return principal_pow(2.0 * i, s) * principal_pow(z[0] + i, -2.0 * s);
        case CayleyKind::BallToSiegelBall:
          return principal_pow(2.0 * i, s) *
                 principal_pow(1.0 - z[0], -(cayley_m_ + 1.0) * s);
        case CayleyKind::SiegelBallToBall:
          return principal_pow(2.0 * i, cayley_m_ * s) *
                 principal_pow(z[0] + i, -(cayley_m_ + 1.0) * s);
      }
      throw std::logic_error("unreachable cayley kind");
    }
    case Kind::AffineSiegel:
      return principal_pow(jacobian(z), s);
    case Kind::ProductMap: {
      Complex j(1.0);
      int so = 0;
      for (const auto& p : parts_) {
        j *= p->jacobian_power(z.segment(so, p->src()->dim()), s);
        so += p->src()->dim();
      }
      return j;
    }
    case Kind::Chain: {
      Complex j(1.0);
      CVector cur = z;
      for (const auto& p : parts_) {
        j *= p->jacobian_power(cur, s);
        cur = p->apply(cur);
      }
      return j;
    }
  }
  throw std::logic_error("unreachable map kind");
}

BaseMapPtr BaseMap::inverse() const {
  switch (kind_) {
    case Kind::Identity:
      return identity(src_);
    case Kind::Mobius:
      return mobius({-mob_.a * phase(mob_.theta), -mob_.theta});
    case Kind::Cayley:
      switch (cay_) {
        case CayleyKind::DiscToHalfPlane:
          return cayley(CayleyKind::HalfPlaneToDisc);
        case CayleyKind::HalfPlaneToDisc:
          return cayley(CayleyKind::DiscToHalfPlane);
        case CayleyKind::BallToSiegelBall:
          return cayley(CayleyKind::SiegelBallToBall, cayley_m_);
        case CayleyKind::SiegelBallToBall:
          return cayley(CayleyKind::BallToSiegelBall, cayley_m_);
      }
      throw std::logic_error("unreachable cayley kind");
    case Kind::AffineSiegel: {
      AffineSiegelParams inv;
      inv.A = aff_.A.inverse();
      inv.B = aff_.B.rows() > 0 ? CMatrix(aff_.B.inverse()) : aff_.B;
      inv.a = -(inv.A * aff_.a);
      inv.c = aff_.B.rows() > 0 ? CVector(-(inv.B * aff_.c)) : aff_.c;
      return affine_siegel(dst_, src_, inv);
    }
    case Kind::ProductMap: {
      std::vector<BaseMapPtr> inv;
      for (const auto& p : parts_) inv.push_back(p->inverse());
      return product_map(std::move(inv));
    }
    case Kind::Chain: {
      std::vector<BaseMapPtr> inv;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        inv.push_back((*it)->inverse());
      return chain(std::move(inv));
    }
  }
  throw std::logic_error("unreachable map kind");
}

BaseMapPtr compose_base(const BaseMapPtr& phi, const BaseMapPtr& psi) {
  std::vector<BaseMapPtr> parts;
  auto push = [&parts](const BaseMapPtr& m) {
    if (m->kind() == BaseMap::Kind::Chain)
      for (const auto& p : m->parts()) parts.push_back(p);
    else if (m->kind() != BaseMap::Kind::Identity)
      parts.push_back(m);
  };
  push(phi);
  push(psi);
  if (parts.empty()) return BaseMap::identity(phi->src());
  return BaseMap::chain(std::move(parts));
}

namespace {

BaseMapPtr fold_mobius(const BaseMapPtr& f, const BaseMapPtr& g) {
  // chi = g . f is again a disc automorphism; recover its parameters
  // from chi^{-1}(0) and arg chi'(a).
  auto apply1 = [](const BaseMapPtr& m, Complex z) {
    CVector v(1);
    v[0] = z;
    return m->apply(v)[0];
  };
  Complex a_g = g->mobius_params().a;
  // f^{-1}(a_g):
  Complex a = apply1(f->inverse(), a_g);
  CVector av(1);
  av[0] = a;
  Complex deriv = g->jacobian(f->apply(av)) * f->jacobian(av);
  double theta = std::arg(deriv);
  return BaseMap::mobius({a, theta});
}

BaseMapPtr fold_affine(const BaseMapPtr& f, const BaseMapPtr& g) {
  const auto& p1 = f->affine_params();
  const auto& p2 = g->affine_params();
  const auto& F3 = g->dst()->siegel_data().form;
  AffineSiegelParams r;
  r.A = p2.A * p1.A;
  r.B = p2.B * p1.B;
  r.c = p2.B * p1.c + p2.c;
  CVector cross = F3.eval(p2.B * p1.c, p2.c);
  r.a = p2.A * p1.a + p2.a - 2.0 * cross.imag();
  return BaseMap::affine_siegel(f->src(), g->dst(), r);
}

}  // namespace

BaseMapPtr canonical_form(const BaseMapPtr& map) {
  if (map->kind() != BaseMap::Kind::Chain) return map;
  const auto& parts = map->parts();
  bool all_mobius = true, all_affine = true;
  for (const auto& p : parts) {
    all_mobius = all_mobius && p->kind() == BaseMap::Kind::Mobius;
    all_affine = all_affine && p->kind() == BaseMap::Kind::AffineSiegel;
  }
  if (all_mobius) {
    BaseMapPtr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = fold_mobius(acc, parts[i]);
    return acc;
  }
  if (all_affine) {
    BaseMapPtr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = fold_affine(acc, parts[i]);
    return acc;
  }
  return nullptr;
}

CVector base_point(const Domain& D) {
  switch (D.kind()) {
    case Domain::Kind::Disc:
    case Domain::Kind::Ball:
      return CVector::Zero(D.dim());
    case Domain::Kind::Siegel: {
      const auto& S = D.siegel_data();
      std::function<RVector(const Cone&)> apex = [&](const Cone& V) -> RVector {
        switch (V.kind()) {
          case ConeKind::HalfLine:
            return RVector::Ones(1);
          case ConeKind::Lorentz: {
            RVector e = RVector::Zero(V.lorentz_n());
            e[0] = 1.0;
            return e;
          }
          case ConeKind::PDHermitian:
            return flatten_hermitian(CMatrix::Identity(V.hermitian_r(), V.hermitian_r()));
          case ConeKind::Product: {
            RVector e(V.ambient_dim());
            int off = 0;
            for (const auto& f : V.factors()) {
              e.segment(off, f->ambient_dim()) = apex(*f);
              off += f->ambient_dim();
            }
            return e;
          }
        }
        throw std::logic_error("unreachable cone kind");
      };
      RVector e = apex(*S.cone);
      CVector w(S.n);
      for (int j = 0; j < S.n; ++j) w[j] = Complex(0.0, e[j]);
      return pack_siegel({w, CVector::Zero(S.m)});
    }
    case Domain::Kind::Product: {
      CVector z(D.dim());
      int off = 0;
      for (const auto& f : D.factors()) {
        z.segment(off, f->dim()) = base_point(*f);
        off += f->dim();
      }
      return z;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

InducedAut induced_from(BaseMapPtr phi, CMatrix U, double s) {
  require(phi != nullptr, "induced_from: base map required");
  require(U.rows() == U.cols() && U.rows() >= 1, "induced_from: U must be square");
  double defect = (U * U.adjoint() - CMatrix::Identity(U.rows(), U.cols())).norm();
  require(defect <= 1e-12 * std::max<double>(1.0, U.rows()),
          "induced_from: U is not unitary");
  require(s > 0.0, "induced_from: s > 0");
  return {std::move(phi), std::move(U), s};
}

InducedAut realization_change(BaseMapPtr sigma, int N, double s) {
  return induced_from(std::move(sigma), CMatrix::Identity(N, N), s);
}

HartogsPoint apply(const InducedAut& map, const HartogsPoint& p) {
  require_dim(p.zeta.size(), map.U.rows(), "induced map fiber");
  Complex jp = map.phi->jacobian_power(p.z, map.s);
  return {map.phi->apply(p.z), CVector((map.U * p.zeta) * jp)};
}

namespace {

struct PhaseSnap {
  Complex delta;
  double angle;
  int k;
};

/// ratio is a constant of the form e^{2 pi i s k}; find k and snap.
PhaseSnap snap_phase(Complex ratio, double s) {
  int best_k = 0;
  double best = std::abs(ratio - Complex(1.0));
  for (int k = -6; k <= 6; ++k) {
    Complex target = phase(wrap_angle(2.0 * kPi * s * k));
    double d = std::abs(ratio - target);
    if (d < best - 1e-15) {
      best = d;
      best_k = k;
    }
  }
  bool integral_s = std::abs(s - std::round(s)) < 1e-12;
  if (best_k == 0 || integral_s) return {Complex(1.0, 0.0), 0.0, best_k};
  double ang = wrap_angle(2.0 * kPi * s * best_k);
  return {phase(ang), ang, best_k};
}

}  // namespace

ComposeResult compose(const InducedAut& Psi, const InducedAut& Phi) {
  require(std::abs(Psi.s - Phi.s) < 1e-14, "compose: exponents differ");
  require(Psi.U.rows() == Phi.U.rows(), "compose: fiber dimensions differ");
  require(same_domain(Phi.phi->dst(), Psi.phi->src()), "compose: base maps do not compose");
  BaseMapPtr mech = compose_base(Phi.phi, Psi.phi);
  CMatrix VU = Psi.U * Phi.U;
  BaseMapPtr canon = canonical_form(mech);
  if (!canon) return {{mech, VU, Phi.s}, 0.0, 0};
  CVector z0 = base_point(*Phi.phi->src());
  Complex ratio = mech->jacobian_power(z0, Phi.s) / canon->jacobian_power(z0, Phi.s);
  PhaseSnap snap = snap_phase(ratio, Phi.s);
  CMatrix folded = snap.delta == Complex(1.0, 0.0) ? VU : CMatrix(snap.delta * VU);
  return {{canon, folded, Phi.s}, snap.angle, snap.k};
}

InducedAut inverse(const InducedAut& Phi) {
  BaseMapPtr inv = Phi.phi->inverse();
  CVector z0 = base_point(*Phi.phi->src());
  Complex ratio =
      Phi.phi->jacobian_power(z0, Phi.s) * inv->jacobian_power(Phi.phi->apply(z0), Phi.s);
  PhaseSnap snap = snap_phase(ratio, Phi.s);
  CMatrix U = CMatrix(Phi.U.adjoint());
  if (snap.delta != Complex(1.0, 0.0)) U = std::conj(snap.delta) * U;
  return {inv, U, Phi.s};
}

BaseMapPtr transitive_base_map(const DomainPtr& D, const SiegelPoint& p, const SiegelPoint& q) {
  require(D->kind() == Domain::Kind::Siegel, "transitive_base_map: Siegel domain required");
  const SiegelDomain& S = D->siegel_data();
  require(siegel_contains(S, p).status == Region::Interior,
          "transitive_base_map: p must be interior");
  require(siegel_contains(S, q).status == Region::Interior,
          "transitive_base_map: q must be interior");

  RVector dp = siegel_defect(S, p);
  RVector dq = siegel_defect(S, q);
  RMatrix A = cone_transitive_map(*S.cone, dp, dq);

  // Fiber companion B with A F(u,v) = F(Bu, Bv): sqrt(lambda) per
  // half-line block carrying a ball form; other catalog blocks have no
  // fiber.
  CMatrix B = CMatrix::Identity(S.m, S.m);
  {
    std::function<void(const SiegelDomain&, int, const std::vector<int>&)> assign =
        [&](const SiegelDomain& blk, int w_off, const std::vector<int>& u_idx) {
          if (blk.cone->kind() == ConeKind::Product) {
            std::vector<std::vector<int>> sub_fibers;
            auto subs = split_siegel(blk, &sub_fibers);
            int off = w_off;
            for (std::size_t i = 0; i < subs.size(); ++i) {
              std::vector<int> mapped;
              for (int a : sub_fibers[i]) mapped.push_back(u_idx[a]);
              assign(subs[i], off, mapped);
              off += subs[i].n;
            }
            return;
          }
          if (blk.m == 0) return;
          require(blk.cone->kind() == ConeKind::HalfLine,
                  "transitive_base_map: no fiber companion for this cone block");
          double lambda = A(w_off, w_off);
          for (int a : u_idx) B(a, a) = std::sqrt(lambda);
        };
    std::vector<int> all(S.m);
    std::iota(all.begin(), all.end(), 0);
    assign(S, 0, all);
  }

  auto make = [&](RMatrix Am, CMatrix Bm, RVector av, CVector cv) {
    AffineSiegelParams pr{std::move(Am), std::move(Bm), std::move(av), std::move(cv)};
    return pr;
  };
  RMatrix I = RMatrix::Identity(S.n, S.n);
  CMatrix Im = CMatrix::Identity(S.m, S.m);
  std::vector<AffineSiegelParams> steps;
  steps.push_back(make(I, Im, RVector::Zero(S.n), CVector(-p.u)));          // kill u
  steps.push_back(make(I, Im, RVector(-p.w.real()), CVector::Zero(S.m)));  // kill Re w
  steps.push_back(make(A, B, RVector::Zero(S.n), CVector::Zero(S.m)));     // move defect
  steps.push_back(make(I, Im, RVector(q.w.real()), CVector::Zero(S.m)));
  steps.push_back(make(I, Im, RVector::Zero(S.n), CVector(q.u)));

  AffineSiegelParams acc = steps[0];
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const auto& g = steps[i];
    AffineSiegelParams next;
    next.A = g.A * acc.A;
    next.B = g.B * acc.B;
    next.c = g.B * acc.c + g.c;
    CVector cross = S.form.eval(g.B * acc.c, g.c);
    next.a = g.A * acc.a + g.a - 2.0 * cross.imag();
    acc = std::move(next);
  }
  return BaseMap::affine_siegel(D, D, acc);
}

JacobianBlockReport jacobian_block(const InducedAut& map, const HartogsPoint& p0) {
  const int r = static_cast<int>(p0.z.size());
  const int N = static_cast<int>(p0.zeta.size());
  HartogsPoint image = apply(map, p0);
  double fix_residual = (image.z - p0.z).norm() + (image.zeta - p0.zeta).norm();
  require(fix_residual <= 1e-8, "jacobian_block: map does not fix the given point");

  auto eval = [&](const CVector& v) {
    HartogsPoint pt{v.head(r), v.tail(N)};
    HartogsPoint out = apply(map, pt);
    return pack_hartogs(out);
  };
  CVector v0 = pack_hartogs(p0);
  const int d = r + N;

  auto fd = [&](double h) {
    CMatrix J(d, d);
    for (int j = 0; j < d; ++j) {
      CVector vp = v0, vm = v0;
      vp[j] += h;
      vm[j] -= h;
      J.col(j) = (eval(vp) - eval(vm)) / (2.0 * h);
    }
    return J;
  };
  CMatrix J1 = fd(1e-5);
  CMatrix J2 = fd(5e-6);
  JacobianBlockReport rep;
  rep.full = J2;
  rep.fd_consistency = (J1 - J2).cwiseAbs().maxCoeff();
  rep.f2_z_norm = J2.block(r, 0, N, r).norm();
  CMatrix C = J2.block(r, r, N, N);
  rep.f2_zeta_unitary_defect = (C * C.adjoint() - CMatrix::Identity(N, N)).norm();
  return rep;
}

double transformation_residual(const Domain& D, const Domain& Dprime, const BaseMap& phi,
                               const CVector& p, const CVector& q) {
  KernelModel KD(D), KDp(Dprime);
  Complex lhs = KDp.eval(phi.apply(p), phi.apply(q)) * phi.jacobian(p) *
                std::conj(phi.jacobian(q));
  Complex rhs = KD.eval(p, q);
  return std::abs(lhs - rhs);
}

CMatrix random_unitary(int n, Rng& rng) {
  CMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ();
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  CVector d(n);
  for (int i = 0; i < n; ++i) {
    Complex rii = R(i, i);
    d[i] = std::abs(rii) > 0 ? rii / std::abs(rii) : Complex(1.0);
  }
  return Q * d.asDiagonal();
}

ConeAutParams sample_cone_aut_params(const Cone& V, Rng& rng) {
  switch (V.kind()) {
    case ConeKind::HalfLine:
      return {HalfLineAutParams{rng.uniform(0.4, 2.5)}};
    case ConeKind::Lorentz: {
      LorentzAutParams p;
      p.scale = rng.uniform(0.5, 2.0);
      p.rapidity = rng.uniform(-0.8, 0.8);
      p.boost_axis = 1 + static_cast<int>(rng.uniform() * (V.lorentz_n() - 1));
      p.boost_axis = std::min(p.boost_axis, V.lorentz_n() - 1);
      if (V.lorentz_n() >= 3) p.rotation = rng.uniform(0.0, 2.0 * kPi);
      return {p};
    }
    case ConeKind::PDHermitian: {
      const int r = V.hermitian_r();
      CMatrix g = random_unitary(r, rng);
      for (int i = 0; i < r; ++i) g.col(i) *= rng.uniform(0.6, 1.6);
      return {PDHermitianAutParams{g}};
    }
    case ConeKind::Product: {
      ProductAutParams p;
      for (const auto& f : V.factors()) p.factors.push_back(sample_cone_aut_params(*f, rng));
      return {p};
    }
  }
  throw std::logic_error("unreachable cone kind");
}

namespace {

/// Fiber companion of a cone automorphism on catalog Siegel domains:
/// sqrt of the half-line scaling times a random unitary per ball block.
CMatrix fiber_companion(const SiegelDomain& S, const RMatrix& A, Rng& rng) {
  CMatrix B = CMatrix::Identity(S.m, S.m);
  std::function<void(const SiegelDomain&, int, const std::vector<int>&)> assign =
      [&](const SiegelDomain& blk, int w_off, const std::vector<int>& u_idx) {
        if (blk.cone->kind() == ConeKind::Product) {
          std::vector<std::vector<int>> sub_fibers;
          auto subs = split_siegel(blk, &sub_fibers);
          int off = w_off;
          for (std::size_t i = 0; i < subs.size(); ++i) {
            std::vector<int> mapped;
            for (int a : sub_fibers[i]) mapped.push_back(u_idx[a]);
            assign(subs[i], off, mapped);
            off += subs[i].n;
          }
          return;
        }
        if (blk.m == 0) return;
        require(blk.cone->kind() == ConeKind::HalfLine,
                "fiber companion: unsupported cone block with fiber");
        double lambda = A(w_off, w_off);
        CMatrix Ub = random_unitary(blk.m, rng);
        for (int a = 0; a < blk.m; ++a)
          for (int b = 0; b < blk.m; ++b) B(u_idx[a], u_idx[b]) = std::sqrt(lambda) * Ub(a, b);
      };
  std::vector<int> all(S.m);
  std::iota(all.begin(), all.end(), 0);
  assign(S, 0, all);
  return B;
}

}  // namespace

BaseMapPtr sample_automorphism(const DomainPtr& D, Rng& rng) {
  switch (D->kind()) {
    case Domain::Kind::Disc: {
      Complex a = 0.6 * std::sqrt(rng.uniform()) * rng.unit_phase();
      return BaseMap::mobius({a, rng.uniform(-kPi, kPi)});
    }
    case Domain::Kind::Ball: {
      const int m = D->ball_m();
      if (m == 1) return sample_automorphism(Domain::disc(), rng);
      auto to_siegel = BaseMap::cayley(CayleyKind::BallToSiegelBall, m);
      auto inner = sample_automorphism(Domain::siegel_ball(m - 1), rng);
      auto back = BaseMap::cayley(CayleyKind::SiegelBallToBall, m);
      return BaseMap::chain({to_siegel, inner, back});
    }
    case Domain::Kind::Siegel: {
      const auto& S = D->siegel_data();
      if (S.m == 0 && S.cone->kind() == ConeKind::HalfLine && rng.uniform() < 0.5) {
        // Non-affine automorphism of the half-plane: conjugated Mobius.
        auto to_disc = BaseMap::cayley(CayleyKind::HalfPlaneToDisc);
        auto inner = sample_automorphism(Domain::disc(), rng);
        auto back = BaseMap::cayley(CayleyKind::DiscToHalfPlane);
        return BaseMap::chain({to_disc, inner, back});
      }
      AffineSiegelParams p;
      p.A = cone_linear_aut(*S.cone, sample_cone_aut_params(*S.cone, rng));
      p.B = fiber_companion(S, p.A, rng);
      p.a = rng.real_gaussian(S.n, 0.7);
      p.c = rng.complex_gaussian(S.m, 0.5);
      return BaseMap::affine_siegel(D, D, std::move(p));
    }
    case Domain::Kind::Product: {
      std::vector<BaseMapPtr> parts;
      for (const auto& f : D->factors()) parts.push_back(sample_automorphism(f, rng));
      return BaseMap::product_map(std::move(parts));
    }
  }
  throw std::logic_error("unreachable domain kind");
}

IsotropySample sample_isotropy_automorphism(const DomainPtr& D, Rng& rng) {
  switch (D->kind()) {
    case Domain::Kind::Disc: {
      // Rotation about 0, optionally conjugated by a Mobius map: the
      // chain psi . rot . psi^{-1} (applied left to right) fixes a.
      auto rot = BaseMap::mobius({Complex(0.0), rng.uniform(-kPi, kPi)});
      CVector zero = CVector::Zero(1);
      if (rng.uniform() < 0.5) return {rot, zero};
      Complex a = 0.4 * std::sqrt(rng.uniform()) * rng.unit_phase();
      auto psi = BaseMap::mobius({a, 0.0});
      CVector fixed(1);
      fixed[0] = a;
      return {BaseMap::chain({psi, rot, psi->inverse()}), fixed};
    }
    case Domain::Kind::Siegel: {
      const auto& S = D->siegel_data();
      AffineSiegelParams p;
      switch (S.cone->kind()) {
        case ConeKind::HalfLine:
          p.A = RMatrix::Identity(1, 1);
          break;
        case ConeKind::Lorentz: {
          LorentzAutParams rot;
          rot.scale = 1.0;
          rot.rapidity = 0.0;
          if (S.cone->lorentz_n() >= 3) rot.rotation = rng.uniform(0.0, 2.0 * kPi);
          p.A = cone_linear_aut(*S.cone, {rot});
          break;
        }
        case ConeKind::PDHermitian:
          p.A = cone_linear_aut(*S.cone,
                                {PDHermitianAutParams{random_unitary(S.cone->hermitian_r(), rng)}});
          break;
        case ConeKind::Product:
          throw std::invalid_argument("sample_isotropy_automorphism: use factor domains");
      }
      p.B = S.m > 0 ? CMatrix(random_unitary(S.m, rng)) : CMatrix::Identity(0, 0);
      p.a = RVector::Zero(S.n);
      p.c = CVector::Zero(S.m);
      return {BaseMap::affine_siegel(D, D, std::move(p)), base_point(*D)};
    }
    default:
      throw std::invalid_argument("sample_isotropy_automorphism: unsupported domain");
  }
}

}  // namespace hsd
