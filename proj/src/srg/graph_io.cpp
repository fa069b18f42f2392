#include "mvg/srg/graph_io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mvg/core/error.hpp"

namespace mvg::srg {

using nlohmann::json;

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, w] : g.edges()) edges.push_back({u, w});
  return json{{"format", "graph-v1"}, {"v", g.order()}, {"edges", std::move(edges)}};
}

json to_json(const DirectedGraph& g) {
  json arcs = json::array();
  for (auto [u, w] : g.arcs()) arcs.push_back({u, w});
  return json{{"format", "graph-v1"}, {"v", g.order()}, {"directed", true}, {"edges", std::move(arcs)}};
}

Graph graph_from_json(const json& doc, const Limits& limits) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "graph-v1")
      throw InputError("expected a JSON object with \"format\":\"graph-v1\"");
    if (doc.value("directed", false)) throw InputError("expected an undirected graph");
    const auto v = doc.at("v").get<std::int64_t>();
    if (v < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges").get<std::vector<std::array<std::int64_t, 2>>>()) {
      if (e[0] < 0 || e[1] < 0) throw InputError("vertex index out of range");
      edges.emplace_back(e[0], e[1]);
    }
    return Graph::from_edges(static_cast<std::size_t>(v), edges, limits);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph-v1 document: ") + e.what());
  }
}

Graph read_edge_list(std::istream& in, const Limits& limits) {
  std::vector<Edge> edges;
  std::int64_t declared = -1;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    auto bad = [&] { throw InputError("edge list line " + std::to_string(lineno) + ": cannot parse"); };
    std::string extra;
    if (first == "v") {
      if (!(ss >> declared) || declared < 0 || (ss >> extra)) bad();
      continue;
    }
    std::int64_t u, w;
    try {
      std::size_t pos;
      u = std::stoll(first, &pos);
      if (pos != first.size()) bad();
    } catch (const std::logic_error&) {
      bad();
    }
    if (!(ss >> w) || (ss >> extra) || u < 0 || w < 0) bad();
    edges.emplace_back(u, w);
    max_index = std::max({max_index, static_cast<std::size_t>(u), static_cast<std::size_t>(w)});
    any = true;
  }
  const std::size_t v = declared >= 0 ? static_cast<std::size_t>(declared) : (any ? max_index + 1 : 0);
  return Graph::from_edges(v, edges, limits);
}

}  // namespace mvg::srg
