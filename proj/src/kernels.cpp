#include "hsd/kernels.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace hsd {

namespace {

const Complex kHalfOverI(0.0, -0.5);  // 1/(2i)

bool is_integral(double e) { return std::abs(e - std::round(e)) < 1e-12; }

/// Principal power with branch-cut detection for non-integer exponents.
Complex cpow_checked(Complex g, double e, const char* where) {
  double mag = std::abs(g);
  if (mag == 0.0) throw EvaluationError(std::string(where) + ": factor vanishes");
  if (is_integral(e)) {
    long k = std::lround(e);
    Complex acc(1.0, 0.0);
    Complex base = k > 0 ? g : Complex(1.0, 0.0) / g;
    for (long i = 0; i < std::labs(k); ++i) acc *= base;
    return acc;
  }
  if (g.real() < 0.0 && std::abs(g.imag()) <= 1e-14 * mag)
    throw EvaluationError(std::string(where) +
                          ": factor value on the branch cut of a non-integer power");
  return std::exp(e * std::log(g));
}

Complex clog_checked(Complex g, const char* where) {
  double mag = std::abs(g);
  if (mag == 0.0) throw EvaluationError(std::string(where) + ": factor vanishes");
  return std::log(g);
}

Complex factor_value(const KernelFactor& f, const CVector& p, const CVector& q) {
  switch (f.tag) {
    case FactorTag::TubeLinear:
      return (p[f.idx[0]] - std::conj(q[f.idx[0]])) * kHalfOverI;
    case FactorTag::UnitPairing: {
      Complex s(0.0);
      for (int i : f.idx) s += p[i] * std::conj(q[i]);
      return Complex(1.0) - s;
    }
    case FactorTag::BallPairing: {
      Complex g = (p[f.idx[0]] - std::conj(q[f.idx[0]])) * kHalfOverI;
      for (std::size_t a = 1; a < f.idx.size(); ++a)
        g -= p[f.idx[a]] * std::conj(q[f.idx[a]]);
      return g;
    }
    case FactorTag::LorentzForm: {
      Complex g(0.0);
      for (std::size_t a = 0; a < f.idx.size(); ++a) {
        Complex v = (p[f.idx[a]] - std::conj(q[f.idx[a]])) * kHalfOverI;
        g += (a == 0 ? v * v : -v * v);
      }
      return g;
    }
    case FactorTag::MatrixDet: {
      const int r = f.mat_r;
      CMatrix A = CMatrix::Zero(r, r);
      for (std::size_t a = 0; a < f.idx.size(); ++a) {
        Complex v = (p[f.idx[a]] - std::conj(q[f.idx[a]])) * kHalfOverI;
        A += v * hermitian_basis_matrix(r, static_cast<int>(a));
      }
      return A.determinant();
    }
  }
  throw std::logic_error("unreachable factor tag");
}

struct FactorDerivs {
  Complex g;
  CVector dlog_p;     // on factor coordinates
  CVector dlog_qbar;  // on factor coordinates
  CMatrix hesslog;    // factor x factor
};

FactorDerivs factor_derivs(const KernelFactor& f, const CVector& p, const CVector& q) {
  const int k = static_cast<int>(f.idx.size());
  FactorDerivs d;
  d.dlog_p = CVector::Zero(k);
  d.dlog_qbar = CVector::Zero(k);
  d.hesslog = CMatrix::Zero(k, k);
  switch (f.tag) {
    case FactorTag::TubeLinear: {
      Complex g = factor_value(f, p, q);
      d.g = g;
      d.dlog_p[0] = kHalfOverI / g;
      d.dlog_qbar[0] = -kHalfOverI / g;
      d.hesslog(0, 0) = -0.25 / (g * g);
      return d;
    }
    case FactorTag::UnitPairing: {
      Complex g = factor_value(f, p, q);
      d.g = g;
      for (int a = 0; a < k; ++a) {
        Complex dg = -std::conj(q[f.idx[a]]);
        Complex dgb = -p[f.idx[a]];
        d.dlog_p[a] = dg / g;
        d.dlog_qbar[a] = dgb / g;
        for (int b = 0; b < k; ++b) {
          Complex ddg = (a == b) ? Complex(-1.0) : Complex(0.0);
          d.hesslog(a, b) =
              (g * ddg - (-std::conj(q[f.idx[a]])) * (-p[f.idx[b]])) / (g * g);
        }
      }
      return d;
    }
    case FactorTag::BallPairing: {
      Complex g = factor_value(f, p, q);
      d.g = g;
      CVector dg(k), dgb(k);
      dg[0] = kHalfOverI;
      dgb[0] = -kHalfOverI;
      for (int a = 1; a < k; ++a) {
        dg[a] = -std::conj(q[f.idx[a]]);
        dgb[a] = -p[f.idx[a]];
      }
      for (int a = 0; a < k; ++a) {
        d.dlog_p[a] = dg[a] / g;
        d.dlog_qbar[a] = dgb[a] / g;
        for (int b = 0; b < k; ++b) {
          Complex ddg = (a == b && a >= 1) ? Complex(-1.0) : Complex(0.0);
          d.hesslog(a, b) = (g * ddg - dg[a] * dgb[b]) / (g * g);
        }
      }
      return d;
    }
    case FactorTag::LorentzForm: {
      CVector v(k), Jv(k);
      for (int a = 0; a < k; ++a) {
        v[a] = (p[f.idx[a]] - std::conj(q[f.idx[a]])) * kHalfOverI;
        Jv[a] = (a == 0) ? v[a] : -v[a];
      }
      Complex g = v[0] * v[0];
      for (int a = 1; a < k; ++a) g -= v[a] * v[a];
      d.g = g;
      for (int a = 0; a < k; ++a) {
        d.dlog_p[a] = kHalfOverI * 2.0 * Jv[a] / g;
        d.dlog_qbar[a] = -kHalfOverI * 2.0 * Jv[a] / g;
        for (int b = 0; b < k; ++b) {
          double Jab = (a == b) ? (a == 0 ? 1.0 : -1.0) : 0.0;
          d.hesslog(a, b) = Jab / (2.0 * g) - Jv[a] * Jv[b] / (g * g);
        }
      }
      return d;
    }
    case FactorTag::MatrixDet: {
      const int r = f.mat_r;
      CMatrix A = CMatrix::Zero(r, r);
      for (int a = 0; a < k; ++a) {
        Complex v = (p[f.idx[a]] - std::conj(q[f.idx[a]])) * kHalfOverI;
        A += v * hermitian_basis_matrix(r, a);
      }
      Complex g = A.determinant();
      d.g = g;
      if (std::abs(g) == 0.0)
        throw EvaluationError("MatrixDet factor is singular");
      CMatrix Ainv = A.inverse();
      std::vector<CMatrix> AinvS(k);
      for (int a = 0; a < k; ++a) AinvS[a] = Ainv * hermitian_basis_matrix(r, a);
      for (int a = 0; a < k; ++a) {
        Complex tr = AinvS[a].trace();
        d.dlog_p[a] = kHalfOverI * tr;
        d.dlog_qbar[a] = -kHalfOverI * tr;
        for (int b = 0; b < k; ++b)
          d.hesslog(a, b) = -0.25 * (AinvS[b] * AinvS[a]).trace();
      }
      return d;
    }
  }
  throw std::logic_error("unreachable factor tag");
}

KernelLeaf disc_leaf(int offset) {
  return {1.0 / kPi, {{FactorTag::UnitPairing, {offset}, -2.0}}};
}

KernelLeaf ball_leaf(int offset, int m) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), offset);
  return {std::tgamma(m + 1.0) / std::pow(kPi, m),
          {{FactorTag::UnitPairing, idx, -(m + 1.0)}}};
}

/// Leaf of an irreducible Siegel block. w coordinates start at w_off,
/// fiber coordinates are given explicitly.
KernelLeaf siegel_leaf(const SiegelDomain& S, int w_off, const std::vector<int>& u_idx) {
  switch (S.cone->kind()) {
    case ConeKind::HalfLine: {
      if (S.m == 0)
        return {1.0 / (4.0 * kPi), {{FactorTag::TubeLinear, {w_off}, -2.0}}};
      require((S.form.H[0] - CMatrix::Identity(S.m, S.m)).cwiseAbs().maxCoeff() < 1e-12,
              "closed-form kernel: Siegel-ball block needs the standard form <u,v>");
      std::vector<int> idx = {w_off};
      idx.insert(idx.end(), u_idx.begin(), u_idx.end());
      const int m = S.m;
      return {std::tgamma(m + 2.0) / (4.0 * std::pow(kPi, m + 1)),
              {{FactorTag::BallPairing, idx, -(m + 2.0)}}};
    }
    case ConeKind::Lorentz: {
      require(S.m == 0, "closed-form kernel: Lorentz tube supports no fiber");
      const int n = S.cone->lorentz_n();
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), w_off);
      return {lorentz_tube_constant(n),
              {{FactorTag::LorentzForm, idx, -static_cast<double>(n)}}};
    }
    case ConeKind::PDHermitian: {
      require(S.m == 0, "closed-form kernel: Hermitian tube supports no fiber");
      const int r = S.cone->hermitian_r();
      std::vector<int> idx(r * r);
      std::iota(idx.begin(), idx.end(), w_off);
      KernelFactor f{FactorTag::MatrixDet, idx, -2.0 * r};
      f.mat_r = r;
      return {hermitian_tube_constant(r), {f}};
    }
    case ConeKind::Product:
      throw std::logic_error("siegel_leaf called on a product cone");
  }
  throw std::logic_error("unreachable cone kind");
}

KernelTree siegel_tree_rec(const SiegelDomain& S, int w_off, const std::vector<int>& u_idx);

KernelTree siegel_tree(const SiegelDomain& S, int base_off) {
  std::vector<int> u_idx(S.m);
  std::iota(u_idx.begin(), u_idx.end(), base_off + S.n);
  return siegel_tree_rec(S, base_off, u_idx);
}

KernelTree domain_tree(const Domain& D, int base_off) {
  KernelTree t;
  switch (D.kind()) {
    case Domain::Kind::Disc:
      t.leaf = disc_leaf(base_off);
      return t;
    case Domain::Kind::Ball:
      t.leaf = ball_leaf(base_off, D.ball_m());
      return t;
    case Domain::Kind::Siegel:
      return siegel_tree(D.siegel_data(), base_off);
    case Domain::Kind::Product: {
      t.is_leaf = false;
      int off = base_off;
      for (const auto& f : D.factors()) {
        t.children.push_back(domain_tree(*f, off));
        off += f->dim();
      }
      return t;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

KernelTree siegel_tree_rec(const SiegelDomain& S, int w_off, const std::vector<int>& u_idx) {
  KernelTree t;
  if (S.cone->kind() != ConeKind::Product) {
    t.leaf = siegel_leaf(S, w_off, u_idx);
    return t;
  }
  std::vector<std::vector<int>> local_fibers;
  auto blocks = split_siegel(S, &local_fibers);
  t.is_leaf = false;
  int blk_w = w_off;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> child_u;
    child_u.reserve(local_fibers[i].size());
    for (int a : local_fibers[i]) child_u.push_back(u_idx[a]);
    t.children.push_back(siegel_tree_rec(blocks[i], blk_w, child_u));
    blk_w += blocks[i].n;
  }
  return t;
}

Complex eval_tree(const KernelTree& t, const CVector& p, const CVector& q) {
  if (t.is_leaf) {
    Complex acc(t.leaf.constant, 0.0);
    for (const auto& f : t.leaf.factors)
      acc *= cpow_checked(factor_value(f, p, q), f.exponent, "kernel_eval");
    return acc;
  }
  Complex acc(1.0, 0.0);
  for (const auto& c : t.children) acc *= eval_tree(c, p, q);
  return acc;
}

Complex log_eval_tree(const KernelTree& t, const CVector& p, const CVector& q) {
  if (t.is_leaf) {
    Complex acc(std::log(t.leaf.constant), 0.0);
    for (const auto& f : t.leaf.factors)
      acc += f.exponent * clog_checked(factor_value(f, p, q), "kernel_log");
    return acc;
  }
  Complex acc(0.0);
  for (const auto& c : t.children) acc += log_eval_tree(c, p, q);
  return acc;
}

Complex pow_eval_tree(const KernelTree& t, const CVector& p, const CVector& q, double s) {
  if (t.is_leaf) {
    Complex acc = cpow_checked(Complex(t.leaf.constant, 0.0), s, "kernel_pow");
    for (const auto& f : t.leaf.factors)
      acc *= cpow_checked(factor_value(f, p, q), f.exponent * s, "kernel_pow");
    return acc;
  }
  Complex acc(1.0, 0.0);
  for (const auto& c : t.children) acc *= pow_eval_tree(c, p, q, s);
  return acc;
}

void collect_leaves(const KernelTree& t, std::vector<const KernelLeaf*>& out) {
  if (t.is_leaf) {
    out.push_back(&t.leaf);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

}  // namespace

double KernelLeaf::exponent_sum() const {
  double s = 0.0;
  for (const auto& f : factors) s += f.exponent;
  return s;
}

KernelModel::KernelModel(const Domain& D) : dim_(D.dim()), tree_(domain_tree(D, 0)) {}

Complex KernelModel::eval(const CVector& p, const CVector& q) const {
  require_dim(p.size(), dim_, "kernel argument p");
  require_dim(q.size(), dim_, "kernel argument q");
  return eval_tree(tree_, p, q);
}

Complex KernelModel::log_eval(const CVector& p, const CVector& q) const {
  require_dim(p.size(), dim_, "kernel argument p");
  require_dim(q.size(), dim_, "kernel argument q");
  return log_eval_tree(tree_, p, q);
}

Complex KernelModel::pow_eval(const CVector& p, const CVector& q, double power) const {
  require_dim(p.size(), dim_, "kernel argument p");
  require_dim(q.size(), dim_, "kernel argument q");
  return pow_eval_tree(tree_, p, q, power);
}

CVector KernelModel::log_gradient_p(const CVector& p, const CVector& q) const {
  CVector g = CVector::Zero(dim_);
  std::vector<const KernelLeaf*> leaves;
  collect_leaves(tree_, leaves);
  for (const auto* leaf : leaves)
    for (const auto& f : leaf->factors) {
      FactorDerivs d = factor_derivs(f, p, q);
      for (std::size_t a = 0; a < f.idx.size(); ++a)
        g[f.idx[a]] += f.exponent * d.dlog_p[a];
    }
  return g;
}

CVector KernelModel::log_gradient_qbar(const CVector& p, const CVector& q) const {
  CVector g = CVector::Zero(dim_);
  std::vector<const KernelLeaf*> leaves;
  collect_leaves(tree_, leaves);
  for (const auto* leaf : leaves)
    for (const auto& f : leaf->factors) {
      FactorDerivs d = factor_derivs(f, p, q);
      for (std::size_t a = 0; a < f.idx.size(); ++a)
        g[f.idx[a]] += f.exponent * d.dlog_qbar[a];
    }
  return g;
}

CMatrix KernelModel::mixed_log_hessian(const CVector& p, const CVector& q) const {
  CMatrix H = CMatrix::Zero(dim_, dim_);
  std::vector<const KernelLeaf*> leaves;
  collect_leaves(tree_, leaves);
  for (const auto* leaf : leaves)
    for (const auto& f : leaf->factors) {
      FactorDerivs d = factor_derivs(f, p, q);
      for (std::size_t a = 0; a < f.idx.size(); ++a)
        for (std::size_t b = 0; b < f.idx.size(); ++b)
          H(f.idx[a], f.idx[b]) += f.exponent * d.hesslog(a, b);
    }
  return H;
}

Complex kernel_eval(const Domain& D, const CVector& p, const CVector& q) {
  return KernelModel(D).eval(p, q);
}

KernelJet kernel_jet(const Domain& D, const CVector& p) {
  KernelModel model(D);
  Complex v = model.eval(p, p);
  if (!(v.real() > 0.0))
    throw EvaluationError("kernel_jet: kernel not positive at the given point");
  KernelJet jet;
  jet.value = v.real();
  jet.grad = model.log_gradient_p(p, p);
  jet.hess = model.mixed_log_hessian(p, p);
  return jet;
}

Complex tumanov_r(const Domain& D, const CVector& p, const CVector& q) {
  KernelModel model(D);
  // eval() throws if any factor vanishes, i.e. if K has a zero or pole.
  (void)model.eval(p, q);
  return model.mixed_log_hessian(p, q).determinant();
}

double lorentz_tube_constant(int n) {
  require(n >= 2, "lorentz_tube_constant: n >= 2");
  double lB = std::lgamma((n - 1) / 2.0) + std::lgamma(n / 2.0 + 1.0) -
              std::lgamma(n + 0.5);
  double logc = std::log(static_cast<double>(n - 1)) + lB + std::lgamma(2.0 * n) -
                std::log(2.0) - std::lgamma(static_cast<double>(n)) -
                n * std::log(4.0 * kPi);
  return std::exp(logc);
}

double hermitian_tube_constant(int r) {
  require(r >= 1, "hermitian_tube_constant: r >= 1");
  double logc = -r * std::log(2.0) - r * r * std::log(2.0 * kPi);
  for (int j = 1; j <= r; ++j)
    logc += std::lgamma(2.0 * r - j + 1.0) - std::lgamma(static_cast<double>(r - j + 1));
  return std::exp(logc);
}

namespace {

double gamma_siegel_block(const SiegelDomain& S, double c) {
  switch (S.cone->kind()) {
    case ConeKind::HalfLine: {
      const int m = S.m + 1;  // biholomorphic to the ball B^{m}
      double g = 1.0;
      for (int j = 1; j <= m; ++j) g *= ((m + 1) * c + j) / j;
      return g;
    }
    case ConeKind::Lorentz: {
      const int n = S.cone->lorentz_n();
      double x = n * c;
      double lg = std::lgamma(x + n / 2.0 + 1.0) - std::lgamma(x + 1.0) +
                  std::lgamma(x + (n + 1) / 2.0) - std::lgamma(x + n + 0.5) +
                  std::lgamma(2.0 * x + 2.0 * n) - std::lgamma(2.0 * x + n);
      double lg0 = std::lgamma(n / 2.0 + 1.0) - 0.0 + std::lgamma((n + 1) / 2.0) -
                   std::lgamma(n + 0.5) + std::lgamma(2.0 * n) -
                   std::lgamma(static_cast<double>(n));
      return std::exp(lg - lg0);
    }
    case ConeKind::PDHermitian: {
      const int r = S.cone->hermitian_r();
      double g = 1.0;
      for (int j = 1; j <= r; ++j)
        for (int i = 0; i < r; ++i)
          g *= (2.0 * r * c + r - j + 1 + i) / (r - j + 1 + i);
      return g;
    }
    case ConeKind::Product: {
      double g = 1.0;
      for (const auto& blk : split_siegel(S)) g *= gamma_siegel_block(blk, c);
      return g;
    }
  }
  throw std::logic_error("unreachable cone kind");
}

}  // namespace

double gamma_weight_ratio(const Domain& D, double c) {
  switch (D.kind()) {
    case Domain::Kind::Disc:
      return 2.0 * c + 1.0;
    case Domain::Kind::Ball: {
      const int m = D.ball_m();
      double g = 1.0;
      for (int j = 1; j <= m; ++j) g *= ((m + 1) * c + j) / j;
      return g;
    }
    case Domain::Kind::Siegel:
      return gamma_siegel_block(D.siegel_data(), c);
    case Domain::Kind::Product: {
      double g = 1.0;
      for (const auto& f : D.factors()) g *= gamma_weight_ratio(*f, c);
      return g;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

std::vector<SiegelDomain> split_siegel(const SiegelDomain& D,
                                       std::vector<std::vector<int>>* fiber_indices) {
  if (fiber_indices) fiber_indices->clear();
  if (D.cone->kind() != ConeKind::Product) {
    if (fiber_indices) {
      std::vector<int> all(D.m);
      std::iota(all.begin(), all.end(), 0);
      fiber_indices->push_back(all);
    }
    return {D};
  }
  std::vector<SiegelDomain> out;
  int w_off = 0;
  std::vector<bool> fiber_taken(D.m, false);
  for (const auto& cone_f : D.cone->factors()) {
    const int nb = cone_f->ambient_dim();
    // Fiber support of this block: columns touched by H_j, j in the block.
    std::set<int> support;
    for (int j = w_off; j < w_off + nb; ++j)
      for (int a = 0; a < D.m; ++a)
        for (int b = 0; b < D.m; ++b)
          if (std::abs(D.form.H[j](a, b)) > 1e-14) {
            support.insert(a);
            support.insert(b);
          }
    for (int a : support) {
      require(!fiber_taken[a], "split_siegel: fiber coordinate shared between cone blocks");
      fiber_taken[a] = true;
    }
    std::vector<int> u_idx(support.begin(), support.end());
    SiegelDomain blk;
    blk.cone = cone_f;
    blk.n = nb;
    blk.m = static_cast<int>(u_idx.size());
    blk.form.n = nb;
    blk.form.m = blk.m;
    blk.form.H.resize(nb);
    for (int j = 0; j < nb; ++j) {
      CMatrix Hj(blk.m, blk.m);
      for (int a = 0; a < blk.m; ++a)
        for (int b = 0; b < blk.m; ++b) Hj(a, b) = D.form.H[w_off + j](u_idx[a], u_idx[b]);
      blk.form.H[j] = Hj;
    }
    if (fiber_indices) fiber_indices->push_back(u_idx);
    out.push_back(std::move(blk));
    w_off += nb;
  }
  for (int a = 0; a < D.m; ++a)
    require(fiber_taken[a], "split_siegel: fiber coordinate unused by every cone block");
  return out;
}

}  // namespace hsd
