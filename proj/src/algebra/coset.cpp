#include "mvg/algebra/coset.hpp"

#include <map>
#include <string>

#include "mvg/core/axioms.hpp"
#include "mvg/core/error.hpp"

namespace mvg::algebra {
namespace {

using Index = FiniteGroup::Index;

std::vector<std::int64_t> counts_for(const FiniteGroup& g, const OrbitPartition& part,
                                     std::span<const Automorphism> images, Index g0, Index h0) {
  std::vector<std::int64_t> counts(part.orbits.size(), 0);
  for (const auto& alpha : images) ++counts[part.orbit_of[g.op(g0, alpha(h0))]];
  return counts;
}

MultivaluedGroup build(const FiniteGroup& g, const OrbitPartition& part,
                       std::span<const Automorphism> images) {
  const std::size_t k = part.orbits.size();
  std::vector<std::int64_t> table(k * k * k);
  std::vector<Element> star(k);
  std::vector<std::string> names(k);
  for (std::size_t x = 0; x < k; ++x) {
    const Index g0 = part.orbits[x].front();
    star[x] = part.orbit_of[g.inverse(g0)];
    names[x] = "[" + std::to_string(g0) + "]";
    for (std::size_t y = 0; y < k; ++y) {
      const auto counts = counts_for(g, part, images, g0, part.orbits[y].front());
      std::copy(counts.begin(), counts.end(), table.begin() + static_cast<long>((x * k + y) * k));
    }
  }
  auto out = MultivaluedGroup::from_table(static_cast<std::int64_t>(images.size()), 0,
                                          std::move(star), std::move(table), std::move(names));
  try {
    require_involutive_group(out);
  } catch (const NotAGroupError& e) {
    throw InternalError(std::string("coset construction produced an invalid table: ") + e.what());
  }
  return out;
}

}  // namespace

MultivaluedGroup coset_group(const FiniteGroup& g, const ActionGroup& a) {
  return build(g, orbits(g, a), a.elements());
}

MultivaluedGroup coset_group_of_homomorphism(const FiniteGroup& g,
                                             std::span<const Automorphism> images,
                                             const Limits& limits) {
  if (images.empty()) throw InputError("the acting group must be nonempty");
  if (images.size() > limits.action) throw ResourceError("acting group exceeds the size cap");
  std::map<Automorphism, std::size_t> multiplicity;
  for (const auto& alpha : images) ++multiplicity[alpha];
  std::vector<Automorphism> distinct;
  for (const auto& [alpha, count] : multiplicity) {
    if (count * multiplicity.size() != images.size())
      throw InputError("images of a homomorphism must all have the same multiplicity");
    distinct.push_back(alpha);
  }
  const ActionGroup image = close_action(g, distinct, limits);
  if (image.size() != distinct.size()) throw InputError("the images do not form a group");
  return build(g, orbits(g, image), images);
}

bool representatives_agree(const FiniteGroup& g, const ActionGroup& a) {
  const OrbitPartition part = orbits(g, a);
  for (const auto& x : part.orbits)
    for (const auto& y : part.orbits) {
      const auto expected = counts_for(g, part, a.elements(), x.front(), y.front());
      for (Index g0 : x)
        for (Index h0 : y)
          if (counts_for(g, part, a.elements(), g0, h0) != expected) return false;
    }
  return true;
}

}  // namespace mvg::algebra
