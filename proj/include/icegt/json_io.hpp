#pragma once

#include <string>

#include "icegt/exactalg.hpp"
#include "icegt/gtpat.hpp"
#include "icegt/lattice.hpp"
#include "json.hpp"

namespace icegt {

using Json = nlohmann::ordered_json;

Json family_to_json(const PathFamily& f);
PathFamily family_from_json(const Json& j);

Json monomial_to_json(const WeightMonomial& m);

// Family JSON plus "ic", "inv" and "omega" for a configuration on a rectangular domain.
Json record_6v(const Domain& d, const EdgeOrientation& o, const PathFamily& f);

Json pattern_to_json(const GTPattern& p);
Json triangle_to_json(const BarredTriangle& t);
GTPattern pattern_from_json(const Json& j);
BarredTriangle triangle_from_json(const Json& j);

// "5;5,6;4,6,6" lists rows from the apex down.
Rows parse_rows(const std::string& s);

}  // namespace icegt
