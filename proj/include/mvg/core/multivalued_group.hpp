#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvg {

using Element = std::size_t;

// Finite multiset over element indices. Zero counts are never stored.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<std::pair<const Element, std::int64_t>> init);

  void add(Element x, std::int64_t count);
  std::int64_t count(Element x) const;
  std::int64_t total() const { return total_; }
  const std::map<Element, std::int64_t>& counts() const { return counts_; }

  bool operator==(const Multiset&) const = default;

 private:
  std::map<Element, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// An n-valued group of finite order, stored as the multiplicity table
// m[x][y][z] = multiplicity of z in the product x*y.
//
// Construction enforces only the structural invariants: table shape,
// nonnegative entries, the row-sum law sum_z m[x][y][z] = n, and that
// star permutes the element indices. The identity, inverse and
// involutivity laws are checked by verify_axioms/verify_involutive so that
// violations can be reported with witnesses rather than rejected outright.
class MultivaluedGroup {
 public:
  // table is flat, indexed (x * order + y) * order + z.
  static MultivaluedGroup from_table(std::int64_t n, Element identity, std::vector<Element> star,
                                     std::vector<std::int64_t> table,
                                     std::vector<std::string> names = {});

  static MultivaluedGroup from_nested(std::int64_t n, Element identity, std::vector<Element> star,
                                      const std::vector<std::vector<std::vector<std::int64_t>>>& table,
                                      std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  std::int64_t valency() const { return n_; }
  Element identity() const { return identity_; }
  Element star(Element x) const { return star_.at(x); }
  const std::vector<Element>& star_map() const { return star_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::int64_t>& table() const { return table_; }

  std::int64_t m(Element x, Element y, Element z) const {
    return table_[(x * order_ + y) * order_ + z];
  }

  std::span<const std::int64_t> row(Element x, Element y) const {
    return {table_.data() + (x * order_ + y) * order_, order_};
  }

  // m(x) = m[x][x*][e], the multiplicity of the identity in x*x^star.
  std::int64_t unit_multiplicity(Element x) const { return m(x, star(x), identity_); }

  // Same table, identity and star (element names are labels and ignored).
  bool operator==(const MultivaluedGroup& other) const;

 private:
  MultivaluedGroup() = default;

  std::size_t order_ = 0;
  std::int64_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> star_;
  std::vector<std::int64_t> table_;
  std::vector<std::string> names_;
};

// The multiset x*y. Throws InputError on an out-of-range index.
Multiset product(const MultivaluedGroup& g, Element x, Element y);

// Every multiplicity multiplied by factor; the valency becomes factor*n.
MultivaluedGroup scale(const MultivaluedGroup& g, std::int64_t factor);

// Relabels elements: result element perm[x] plays the role of x.
MultivaluedGroup relabel(const MultivaluedGroup& g, const std::vector<Element>& perm);

}  // namespace mvg
