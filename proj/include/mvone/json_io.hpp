#pragma once

#include "mvone/certifier.hpp"
#include "mvone/mixed_volume.hpp"
#include "mvone/solver.hpp"

#include <string>

#include "json.hpp"

namespace mvone {

using Json = nlohmann::json;

// Schemas:
//   polytope     {"dim": n, "vertices": [[int,...],...]}
//   tuple        {"dim": n, "polytopes": [<polytope>,...]}
//   system       {"vars": n, "polynomials": [{"terms": [{"exp": [int,...], "coef": "p/q"},...]},...]}
//   point        {"point": ["p/q",...]}
//   certificate  {"translations": [[int,...],...], "simplex": <polytope>}
// Parsers throw std::invalid_argument with a field path on malformed input.

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& where);

Json polytope_to_json(const LatticePolytope& x);
LatticePolytope polytope_from_json(const Json& j);

Json tuple_to_json(const PolytopeTuple& a);
PolytopeTuple tuple_from_json(const Json& j);

Json certificate_to_json(const UnitCertificate& c);
UnitCertificate certificate_from_json(const Json& j);

Json decomposition_to_json(const Theorem1Decomposition& d);

Json system_to_json(const LaurentSystem& s);
LaurentSystem system_from_json(const Json& j);

Json point_to_json(const TorusPoint& p);
TorusPoint point_from_json(const Json& j);

Json plan_to_json(const SolvePlan& p);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace mvone
