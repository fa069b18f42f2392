#include "mvg/core/json_io.hpp"

#include "mvg/core/error.hpp"

namespace mvg {

using nlohmann::json;

json to_json(const MultivaluedGroup& g) {
  const std::size_t k = g.order();
  json table = json::array();
  for (Element x = 0; x < k; ++x) {
    json plane = json::array();
    for (Element y = 0; y < k; ++y) {
      auto r = g.row(x, y);
      plane.push_back(std::vector<std::int64_t>(r.begin(), r.end()));
    }
    table.push_back(std::move(plane));
  }
  return json{{"format", "mvg-v1"},      {"n", g.valency()},
              {"elements", g.names()},   {"identity", g.identity()},
              {"star", g.star_map()},    {"table", std::move(table)}};
}

MultivaluedGroup mvg_from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "mvg-v1")
      throw InputError("expected a JSON object with \"format\":\"mvg-v1\"");
    const auto n = doc.at("n").get<std::int64_t>();
    const auto identity = doc.at("identity").get<std::int64_t>();
    const auto star = doc.at("star").get<std::vector<std::int64_t>>();
    const auto table = doc.at("table").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    std::vector<std::string> names;
    if (doc.contains("elements")) names = doc.at("elements").get<std::vector<std::string>>();

    if (identity < 0) throw InputError("identity index out of range");
    std::vector<Element> star_idx;
    for (auto s : star) {
      if (s < 0) throw InputError("star index out of range");
      star_idx.push_back(static_cast<Element>(s));
    }
    return MultivaluedGroup::from_nested(n, static_cast<Element>(identity), std::move(star_idx),
                                         table, std::move(names));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed mvg-v1 document: ") + e.what());
  }
}

}  // namespace mvg
