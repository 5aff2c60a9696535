#include "hsd/json_io.hpp"

#include <fstream>

namespace hsd {

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const RMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  require(j.is_array() && j.size() == 2, "complex values are [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

CVector cvector_from_json(const Json& j) {
  require(j.is_array(), "expected an array of complex values");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return v;
}

RVector rvector_from_json(const Json& j) {
  require(j.is_array(), "expected an array of reals");
  RVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

CMatrix cmatrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "expected a matrix");
  const auto rows = j.size();
  const auto cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(j[i][k]);
  return m;
}

RMatrix rmatrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "expected a matrix");
  const auto rows = j.size();
  const auto cols = j[0].size();
  RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<double>();
  return m;
}

Json cone_to_json(const Cone& cone) {
  switch (cone.kind()) {
    case ConeKind::HalfLine:
      return {{"kind", "half_line"}};
    case ConeKind::Lorentz:
      return {{"kind", "lorentz"}, {"n", cone.lorentz_n()}};
    case ConeKind::PDHermitian:
      return {{"kind", "pd_hermitian"}, {"r", cone.hermitian_r()}};
    case ConeKind::Product: {
      Json factors = Json::array();
      for (const auto& f : cone.factors()) factors.push_back(cone_to_json(*f));
      return {{"kind", "product"}, {"factors", factors}};
    }
  }
  throw std::logic_error("unreachable cone kind");
}

ConePtr cone_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "half_line") return Cone::half_line();
  if (kind == "lorentz") return Cone::lorentz(j.at("n").get<int>());
  if (kind == "pd_hermitian") return Cone::pd_hermitian(j.at("r").get<int>());
  if (kind == "product") {
    std::vector<ConePtr> factors;
    for (const auto& f : j.at("factors")) factors.push_back(cone_from_json(f));
    return Cone::product(std::move(factors));
  }
  throw std::invalid_argument("unknown cone kind: " + kind);
}

Json domain_to_json(const Domain& D) {
  switch (D.kind()) {
    case Domain::Kind::Disc:
      return {{"kind", "disc"}};
    case Domain::Kind::Ball:
      return {{"kind", "ball"}, {"m", D.ball_m()}};
    case Domain::Kind::Siegel: {
      const auto& S = D.siegel_data();
      if (S.m == 0 && S.cone->kind() == ConeKind::HalfLine) return {{"kind", "half_plane"}};
      if (S.m >= 1 && S.n == 1 && S.cone->kind() == ConeKind::HalfLine &&
          (S.form.H[0] - CMatrix::Identity(S.m, S.m)).cwiseAbs().maxCoeff() < 1e-14)
        return {{"kind", "siegel_ball"}, {"m", S.m}};
      if (S.m == 0) return {{"kind", "tube"}, {"cone", cone_to_json(*S.cone)}};
      Json H = Json::array();
      for (const auto& Hj : S.form.H) H.push_back(to_json(Hj));
      return {{"kind", "siegel"}, {"cone", cone_to_json(*S.cone)}, {"m", S.m}, {"H", H}};
    }
    case Domain::Kind::Product: {
      Json factors = Json::array();
      for (const auto& f : D.factors()) factors.push_back(domain_to_json(*f));
      return {{"kind", "product"}, {"factors", factors}};
    }
  }
  throw std::logic_error("unreachable domain kind");
}

DomainPtr domain_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disc") return Domain::disc();
  if (kind == "ball") return Domain::ball(j.at("m").get<int>());
  if (kind == "half_plane") return Domain::half_plane();
  if (kind == "siegel_ball") return Domain::siegel_ball(j.at("m").get<int>());
  if (kind == "tube") return Domain::tube_over(cone_from_json(j.at("cone")));
  if (kind == "siegel") {
    SiegelDomain S;
    S.cone = cone_from_json(j.at("cone"));
    S.n = S.cone->ambient_dim();
    S.m = j.at("m").get<int>();
    S.form.n = S.n;
    S.form.m = S.m;
    for (const auto& Hj : j.at("H")) S.form.H.push_back(cmatrix_from_json(Hj));
    return Domain::siegel(std::move(S));
  }
  if (kind == "product") {
    std::vector<DomainPtr> factors;
    for (const auto& f : j.at("factors")) factors.push_back(domain_from_json(f));
    return Domain::product(std::move(factors));
  }
  throw std::invalid_argument("unknown domain kind: " + kind);
}

bool is_hartogs_descriptor(const Json& j) { return j.is_object() && j.contains("base"); }

Json hartogs_to_json(const HartogsDomain& H) {
  return {{"base", domain_to_json(*H.base)}, {"N", H.N}, {"s", H.s}};
}

HartogsDomain hartogs_from_json(const Json& j) {
  return make_hartogs(domain_from_json(j.at("base")), j.at("N").get<int>(),
                      j.at("s").get<double>());
}

Json point_to_json(const HartogsPoint& p) {
  return {{"z", to_json(p.z)}, {"zeta", to_json(p.zeta)}};
}

HartogsPoint point_from_json(const Json& j, int base_dim, int fiber_dim) {
  if (j.is_object()) {
    HartogsPoint p{cvector_from_json(j.at("z")),
                   j.contains("zeta") ? cvector_from_json(j.at("zeta")) : CVector(0)};
    require_dim(p.z.size(), base_dim, "point z");
    if (fiber_dim >= 0) require_dim(p.zeta.size(), fiber_dim, "point zeta");
    return p;
  }
  // Flat array of [re, im] pairs: first base_dim entries are z.
  CVector all = cvector_from_json(j);
  require(all.size() >= base_dim, "point has too few coordinates");
  if (fiber_dim >= 0)
    require_dim(all.size(), static_cast<Eigen::Index>(base_dim) + fiber_dim, "point");
  return {all.head(base_dim), all.tail(all.size() - base_dim)};
}

Json map_to_json(const BaseMap& map) {
  switch (map.kind()) {
    case BaseMap::Kind::Identity:
      return {{"kind", "identity"}, {"domain", domain_to_json(*map.src())}};
    case BaseMap::Kind::Mobius:
      return {{"kind", "mobius"}, {"a", to_json(map.mobius_params().a)},
              {"theta", map.mobius_params().theta}};
    case BaseMap::Kind::Cayley: {
      const char* dir = nullptr;
      switch (map.cayley_kind()) {
        case CayleyKind::DiscToHalfPlane: dir = "disc_to_half_plane"; break;
        case CayleyKind::HalfPlaneToDisc: dir = "half_plane_to_disc"; break;
        case CayleyKind::BallToSiegelBall: dir = "ball_to_siegel_ball"; break;
        case CayleyKind::SiegelBallToBall: dir = "siegel_ball_to_ball"; break;
      }
      return {{"kind", "cayley"}, {"direction", dir}, {"m", map.cayley_m()}};
    }
    case BaseMap::Kind::AffineSiegel: {
      const auto& p = map.affine_params();
      return {{"kind", "affine"},   {"domain", domain_to_json(*map.src())},
              {"target", domain_to_json(*map.dst())},
              {"A", to_json(p.A)},  {"B", to_json(p.B)},
              {"a", to_json(p.a)},  {"c", to_json(p.c)}};
    }
    case BaseMap::Kind::ProductMap: {
      Json parts = Json::array();
      for (const auto& m : map.parts()) parts.push_back(map_to_json(*m));
      return {{"kind", "product_map"}, {"maps", parts}};
    }
    case BaseMap::Kind::Chain: {
      Json parts = Json::array();
      for (const auto& m : map.parts()) parts.push_back(map_to_json(*m));
      return {{"kind", "chain"}, {"maps", parts}};
    }
  }
  throw std::logic_error("unreachable map kind");
}

BaseMapPtr map_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return BaseMap::identity(domain_from_json(j.at("domain")));
  if (kind == "mobius")
    return BaseMap::mobius({complex_from_json(j.at("a")), j.at("theta").get<double>()});
  if (kind == "cayley") {
    const std::string dir = j.at("direction").get<std::string>();
    int m = j.contains("m") ? j.at("m").get<int>() : 1;
    if (dir == "disc_to_half_plane") return BaseMap::cayley(CayleyKind::DiscToHalfPlane);
    if (dir == "half_plane_to_disc") return BaseMap::cayley(CayleyKind::HalfPlaneToDisc);
    if (dir == "ball_to_siegel_ball") return BaseMap::cayley(CayleyKind::BallToSiegelBall, m);
    if (dir == "siegel_ball_to_ball") return BaseMap::cayley(CayleyKind::SiegelBallToBall, m);
    throw std::invalid_argument("unknown cayley direction: " + dir);
  }
  if (kind == "affine") {
    DomainPtr src = domain_from_json(j.at("domain"));
    DomainPtr dst = j.contains("target") ? domain_from_json(j.at("target")) : src;
    AffineSiegelParams p;
    p.A = rmatrix_from_json(j.at("A"));
    const auto& S = dst->siegel_data();
    p.B = j.contains("B") && !j.at("B").empty() ? cmatrix_from_json(j.at("B"))
                                                : CMatrix::Identity(S.m, S.m);
    p.a = j.contains("a") ? rvector_from_json(j.at("a")) : RVector::Zero(S.n);
    p.c = j.contains("c") ? cvector_from_json(j.at("c")) : CVector::Zero(S.m);
    return BaseMap::affine_siegel(std::move(src), std::move(dst), std::move(p));
  }
  if (kind == "product_map") {
    std::vector<BaseMapPtr> parts;
    for (const auto& m : j.at("maps")) parts.push_back(map_from_json(m));
    return BaseMap::product_map(std::move(parts));
  }
  if (kind == "chain") {
    std::vector<BaseMapPtr> parts;
    for (const auto& m : j.at("maps")) parts.push_back(map_from_json(m));
    return BaseMap::chain(std::move(parts));
  }
  throw std::invalid_argument("unknown map kind: " + kind);
}

Json induced_to_json(const InducedAut& map) {
  return {{"kind", "induced"}, {"base", map_to_json(*map.phi)}, {"U", to_json(map.U)},
          {"s", map.s}};
}

InducedAut induced_from_json(const Json& j) {
  if (j.contains("kind") && j.at("kind") == "induced")
    return induced_from(map_from_json(j.at("base")), cmatrix_from_json(j.at("U")),
                        j.at("s").get<double>());
  // A bare base map acts with trivial U and s = 1 on demand.
  throw std::invalid_argument("expected an induced automorphism descriptor");
}

Json load_json_arg(const std::string& arg) {
  for (char ch : arg) {
    if (ch == ' ' || ch == '\t' || ch == '\n') continue;
    if (ch == '{' || ch == '[') return Json::parse(arg);
    break;
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file: " + arg);
  Json j;
  in >> j;
  return j;
}

}  // namespace hsd
