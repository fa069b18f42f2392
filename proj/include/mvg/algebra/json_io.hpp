#pragma once

#include <json.hpp>

#include "mvg/algebra/action.hpp"
#include "mvg/algebra/finite_group.hpp"

namespace mvg::algebra {

// grp-v1: {"format":"grp-v1","size":n,"op":[[..]]}
nlohmann::json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& doc, const Limits& limits = {});

// act-v1: {"format":"act-v1","generators":[[..]]}, each generator an image array.
nlohmann::json to_json(const std::vector<Automorphism>& generators);
std::vector<Automorphism> generators_from_json(const FiniteGroup& g, const nlohmann::json& doc);

}  // namespace mvg::algebra
