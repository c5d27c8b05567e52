#pragma once

#include "gridmagic/decompose.hpp"
#include "gridmagic/ehrhart.hpp"
#include "gridmagic/graph.hpp"
#include "gridmagic/labelling.hpp"
#include "gridmagic/recurrence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gridmagic {

// Arbitrary-precision integers and rationals are emitted as decimal strings
// so values of any size round-trip exactly; structural numbers (dimensions,
// indices, labels) stay JSON numbers.

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json bipartition_to_json(const Graph& g);
nlohmann::json hdescription_to_json(const Graph& g);

nlohmann::json labelling_to_json(const MagicLabelling& l);
MagicLabelling labelling_from_json(const nlohmann::json& j);
nlohmann::json validation_to_json(const ValidationReport& r);

nlohmann::json ehrhart_to_json(const EhrhartData& e);
std::string ehrhart_series_string(const EhrhartData& e);
nlohmann::json gorenstein_to_json(const GorensteinResult& r, int rows, int cols,
                                  Topology topology);

nlohmann::json recurrence_to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const nlohmann::json& j);
nlohmann::json reciprocity_to_json(const ReciprocityReport& rep);
nlohmann::json power_to_json(const PowerReport& rep);

nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json labellings_to_json(const std::vector<MagicLabelling>& ls);

}  // namespace gridmagic
