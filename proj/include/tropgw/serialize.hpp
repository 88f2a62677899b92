#pragma once

#include "tropgw/fock.hpp"
#include "tropgw/gwh.hpp"
#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"
#include "tropgw/trop_covers.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tropgw {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"2,1": "p/q", ...} in canonical partition order.
Json to_json(const WElement& w);
Json to_json(const TropicalCover& c);
TropicalCover cover_from_json(const Json& j);
Json to_json(const WeightedCover& c);
Json to_json(const std::vector<WeightedCover>& covers);
Json to_json(const SurgeryEntry& e);
Json to_json(const FeynmanDiagram& d);

/// Graphviz rendering; vertices are ranked by target position.
std::string to_dot(const TropicalCover& c, const std::string& name = "cover");
std::string to_dot(const FeynmanDiagram& d, const std::vector<HeisenbergMonomial>& product,
                   const std::string& name = "feynman");

}  // namespace tropgw
