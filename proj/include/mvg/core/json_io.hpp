#pragma once

#include <json.hpp>

#include "mvg/core/multivalued_group.hpp"

namespace mvg {

// mvg-v1: {"format":"mvg-v1","n":..,"elements":[..],"identity":..,
//          "star":[..],"table":[[[..]]]} with table[x][y][z] = m.
nlohmann::json to_json(const MultivaluedGroup& g);

// Throws InputError on any schema violation, including a row sum != n.
MultivaluedGroup mvg_from_json(const nlohmann::json& doc);

}  // namespace mvg
