#include "mvg/core/multivalued_group.hpp"

#include <algorithm>

#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg {

Multiset::Multiset(std::initializer_list<std::pair<const Element, std::int64_t>> init) {
  for (const auto& [x, c] : init) add(x, c);
}

void Multiset::add(Element x, std::int64_t count) {
  if (count < 0) throw InputError("negative multiplicity");
  if (count == 0) return;
  counts_[x] = checked_add(counts_[x], count);
  total_ = checked_add(total_, count);
}

std::int64_t Multiset::count(Element x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

MultivaluedGroup MultivaluedGroup::from_table(std::int64_t n, Element identity,
                                              std::vector<Element> star,
                                              std::vector<std::int64_t> table,
                                              std::vector<std::string> names) {
  const std::size_t order = star.size();
  if (order == 0) throw InputError("a multivalued group needs at least one element");
  if (n < 1) throw InputError("valency must be positive");
  if (identity >= order) throw InputError("identity index out of range");
  if (table.size() != order * order * order) throw InputError("table size is not order^3");

  std::vector<bool> seen(order, false);
  for (Element s : star) {
    if (s >= order || seen[s]) throw InputError("star is not a permutation of the elements");
    seen[s] = true;
  }
  for (std::size_t xy = 0; xy < order * order; ++xy) {
    std::int64_t sum = 0;
    for (std::size_t z = 0; z < order; ++z) {
      std::int64_t m = table[xy * order + z];
      if (m < 0) throw InputError("negative multiplicity in table");
      sum = checked_add(sum, m);
    }
    if (sum != n) {
      throw InputError("row sum of m[" + std::to_string(xy / order) + "][" +
                       std::to_string(xy % order) + "] is " + std::to_string(sum) +
                       ", expected " + std::to_string(n));
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < order; ++i) names.push_back("x" + std::to_string(i));
  } else if (names.size() != order) {
    throw InputError("element name count does not match order");
  }

  MultivaluedGroup g;
  g.order_ = order;
  g.n_ = n;
  g.identity_ = identity;
  g.star_ = std::move(star);
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  return g;
}

MultivaluedGroup MultivaluedGroup::from_nested(
    std::int64_t n, Element identity, std::vector<Element> star,
    const std::vector<std::vector<std::vector<std::int64_t>>>& table,
    std::vector<std::string> names) {
  const std::size_t order = star.size();
  std::vector<std::int64_t> flat;
  flat.reserve(order * order * order);
  if (table.size() != order) throw InputError("table has wrong outer dimension");
  for (const auto& plane : table) {
    if (plane.size() != order) throw InputError("table has wrong middle dimension");
    for (const auto& row : plane) {
      if (row.size() != order) throw InputError("table has wrong inner dimension");
      flat.insert(flat.end(), row.begin(), row.end());
    }
  }
  return from_table(n, identity, std::move(star), std::move(flat), std::move(names));
}

bool MultivaluedGroup::operator==(const MultivaluedGroup& other) const {
  return n_ == other.n_ && identity_ == other.identity_ && star_ == other.star_ &&
         table_ == other.table_;
}

Multiset product(const MultivaluedGroup& g, Element x, Element y) {
  if (x >= g.order() || y >= g.order()) throw InputError("element index out of range");
  Multiset out;
  auto r = g.row(x, y);
  for (Element z = 0; z < g.order(); ++z) out.add(z, r[z]);
  return out;
}

MultivaluedGroup scale(const MultivaluedGroup& g, std::int64_t factor) {
  if (factor < 1) throw InputError("scale factor must be positive");
  std::vector<std::int64_t> table = g.table();
  for (auto& m : table) m = checked_mul(m, factor);
  return MultivaluedGroup::from_table(checked_mul(g.valency(), factor), g.identity(),
                                      g.star_map(), std::move(table), g.names());
}

MultivaluedGroup relabel(const MultivaluedGroup& g, const std::vector<Element>& perm) {
  const std::size_t k = g.order();
  if (perm.size() != k) throw InputError("relabeling has wrong length");
  std::vector<bool> seen(k, false);
  for (Element p : perm) {
    if (p >= k || seen[p]) throw InputError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<std::int64_t> table(k * k * k);
  std::vector<Element> star(k);
  std::vector<std::string> names(k);
  for (Element x = 0; x < k; ++x) {
    star[perm[x]] = perm[g.star(x)];
    names[perm[x]] = g.names()[x];
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z)
        table[(perm[x] * k + perm[y]) * k + perm[z]] = g.m(x, y, z);
  }
  return MultivaluedGroup::from_table(g.valency(), perm[g.identity()], std::move(star),
                                      std::move(table), std::move(names));
}

}  // namespace mvg
