#pragma once

#include <istream>
#include <json.hpp>

#include "mvg/srg/graph.hpp"

namespace mvg::srg {

// graph-v1: {"format":"graph-v1","v":n,"edges":[[u,w],..]}; digraphs add
// "directed":true and list arcs.
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const DirectedGraph& g);
Graph graph_from_json(const nlohmann::json& doc, const Limits& limits = {});

// Plain edge list: one "u w" pair per line, '#' starts a comment, and an
// optional "v N" line fixes the vertex count (otherwise max index + 1).
Graph read_edge_list(std::istream& in, const Limits& limits = {});

}  // namespace mvg::srg
