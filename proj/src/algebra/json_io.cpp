#include "mvg/algebra/json_io.hpp"

#include "mvg/core/error.hpp"

namespace mvg::algebra {

using nlohmann::json;
using Index = FiniteGroup::Index;

namespace {

void expect_format(const json& doc, const char* format) {
  if (!doc.is_object() || doc.value("format", "") != format)
    throw InputError(std::string("expected a JSON object with \"format\":\"") + format + "\"");
}

Index to_index(std::int64_t v, std::size_t size) {
  if (v < 0 || static_cast<std::size_t>(v) >= size) throw InputError("element index out of range");
  return static_cast<Index>(v);
}

}  // namespace

json to_json(const FiniteGroup& g) {
  json op = json::array();
  for (Index a = 0; a < g.size(); ++a) {
    std::vector<Index> row(g.size());
    for (Index b = 0; b < g.size(); ++b) row[b] = g.op(a, b);
    op.push_back(std::move(row));
  }
  return json{{"format", "grp-v1"}, {"size", g.size()}, {"op", std::move(op)}};
}

FiniteGroup group_from_json(const json& doc, const Limits& limits) {
  try {
    expect_format(doc, "grp-v1");
    const auto size = doc.at("size").get<std::int64_t>();
    if (size <= 0) throw InputError("group size must be positive");
    if (static_cast<std::size_t>(size) > limits.group)
      throw ResourceError("group size " + std::to_string(size) + " exceeds cap");
    const auto rows = doc.at("op").get<std::vector<std::vector<std::int64_t>>>();
    if (rows.size() != static_cast<std::size_t>(size)) throw InputError("op must have size rows");
    std::vector<Index> op;
    op.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw InputError("op rows must have size entries");
      for (auto v : r) op.push_back(to_index(v, rows.size()));
    }
    return FiniteGroup::from_table(rows.size(), std::move(op), limits);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed grp-v1 document: ") + e.what());
  }
}

json to_json(const std::vector<Automorphism>& generators) {
  json gens = json::array();
  for (const auto& a : generators) gens.push_back(a.perm());
  return json{{"format", "act-v1"}, {"generators", std::move(gens)}};
}

std::vector<Automorphism> generators_from_json(const FiniteGroup& g, const json& doc) {
  try {
    expect_format(doc, "act-v1");
    std::vector<Automorphism> out;
    for (const auto& gen : doc.at("generators").get<std::vector<std::vector<std::int64_t>>>()) {
      if (gen.size() != g.size()) throw InputError("generator length differs from group size");
      std::vector<Index> perm;
      for (auto v : gen) perm.push_back(to_index(v, g.size()));
      out.push_back(Automorphism::make(g, std::move(perm)));
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed act-v1 document: ") + e.what());
  }
}

}  // namespace mvg::algebra
