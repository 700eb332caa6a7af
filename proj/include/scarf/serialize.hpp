#pragma once

#include <json.hpp>

#include "scarf/bpoly.hpp"
#include "scarf/spoly.hpp"

namespace scarf {

// BPoly <-> ["num/den", ...] indexed by power of b; SPoly <-> array of those.
// Parsing accepts exactly what the writers emit plus plain integers.

nlohmann::json to_json(const BPoly& p);
nlohmann::json to_json(const SPoly& p);

BPoly bpoly_from_json(const nlohmann::json& j);
SPoly spoly_from_json(const nlohmann::json& j);

}  // namespace scarf
