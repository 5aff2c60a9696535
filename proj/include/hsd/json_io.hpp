#pragma once

#include <string>

#include <json.hpp>

#include "hsd/automorphisms.hpp"
#include "hsd/domain.hpp"
#include "hsd/hartogs.hpp"

namespace hsd {

using Json = nlohmann::json;

// Complex numbers on the wire are always [re, im] arrays; points are
// {"z": [...], "zeta": [...]}; matrices are row-major nested arrays.

Json to_json(const Complex& c);
Json to_json(const CVector& v);
Json to_json(const RVector& v);
Json to_json(const CMatrix& m);
Json to_json(const RMatrix& m);
Complex complex_from_json(const Json& j);
CVector cvector_from_json(const Json& j);
RVector rvector_from_json(const Json& j);
CMatrix cmatrix_from_json(const Json& j);
RMatrix rmatrix_from_json(const Json& j);

Json cone_to_json(const Cone& cone);
ConePtr cone_from_json(const Json& j);

Json domain_to_json(const Domain& D);
DomainPtr domain_from_json(const Json& j);

Json hartogs_to_json(const HartogsDomain& H);
HartogsDomain hartogs_from_json(const Json& j);
bool is_hartogs_descriptor(const Json& j);

Json point_to_json(const HartogsPoint& p);
HartogsPoint point_from_json(const Json& j, int base_dim, int fiber_dim);

Json map_to_json(const BaseMap& map);
BaseMapPtr map_from_json(const Json& j);
Json induced_to_json(const InducedAut& map);
InducedAut induced_from_json(const Json& j);

/// Parses either inline JSON (first non-space char '{') or a file path.
Json load_json_arg(const std::string& arg);

}  // namespace hsd
