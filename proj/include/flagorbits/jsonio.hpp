#pragma once

#include <json.hpp>

#include "flagorbits/indlimits.hpp"

namespace flagorbits {

using json = nlohmann::json;

// Scalars travel as strings in the textual grammar; matrices and flags as
// {"n": int, "basis": [[scalar, ...], ...]} with columns in flag order.

json flag_to_json(const Flag& f);
Flag flag_from_json(const json& j, const TowerPtr& tower);

json clan_to_json(const Clan& c);
Clan clan_from_json(const json& j);

json orbit_param_to_json(const OrbitParam& p);
OrbitParam orbit_param_from_json(const json& j);

json setup_to_json(const SpaceSetup& s);
SpaceSetup setup_from_json(const json& j);

json ind_setup_to_json(const IndSetup& s);
IndSetup ind_setup_from_json(const json& j);

json ind_param_to_json(const IndParam& p);

json criterion_to_json(const CriterionResult& r);

}  // namespace flagorbits
