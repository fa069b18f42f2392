#include "mvg/algebra/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "mvg/core/error.hpp"

namespace mvg::algebra {

Automorphism Automorphism::make(const FiniteGroup& g, std::vector<Index> perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) throw InputError("automorphism has the wrong number of images");
  std::vector<bool> seen(n, false);
  for (Index v : perm) {
    if (v >= n || seen[v]) throw InputError("automorphism images are not a permutation");
    seen[v] = true;
  }
  if (perm[g.identity()] != g.identity()) throw InputError("automorphism must fix the identity");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (perm[g.op(a, b)] != g.op(perm[a], perm[b]))
        throw InputError("permutation does not respect the group operation at (" +
                         std::to_string(a) + "," + std::to_string(b) + ")");
  return Automorphism(std::move(perm));
}

Automorphism Automorphism::identity(const FiniteGroup& g) {
  std::vector<Index> perm(g.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  return Automorphism(std::move(perm));
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<Index> out(perm_.size());
  for (std::size_t x = 0; x < perm_.size(); ++x) out[x] = next.perm_[perm_[x]];
  return Automorphism(std::move(out));
}

ActionGroup close_action(const FiniteGroup& g, const std::vector<Automorphism>& generators,
                         const Limits& limits) {
  for (const auto& gen : generators)
    if (gen.size() != g.size()) throw InputError("generator acts on a different group");

  std::set<Automorphism> seen{Automorphism::identity(g)};
  std::deque<Automorphism> queue{Automorphism::identity(g)};
  while (!queue.empty()) {
    Automorphism cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      Automorphism next = cur.then(gen);
      if (seen.insert(next).second) {
        if (seen.size() > limits.action)
          throw ResourceError("action group exceeds the cap of " + std::to_string(limits.action));
        queue.push_back(std::move(next));
      }
    }
  }
  ActionGroup out;
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

OrbitPartition orbits(const FiniteGroup& g, const ActionGroup& a) {
  const std::size_t n = g.size();
  std::vector<std::vector<FiniteGroup::Index>> found;
  std::vector<bool> done(n, false);
  for (FiniteGroup::Index x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<FiniteGroup::Index> orb;
    for (const auto& alpha : a.elements()) {
      const auto y = alpha(x);
      if (!done[y]) {
        done[y] = true;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    found.push_back(std::move(orb));
  }
  // found is already ordered by least element; move the identity orbit up.
  auto it = std::find_if(found.begin(), found.end(),
                         [&](const auto& orb) { return orb.front() == g.identity(); });
  std::rotate(found.begin(), it, it + 1);

  OrbitPartition out;
  out.orbit_of.assign(n, 0);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (auto x : found[i]) out.orbit_of[x] = i;
  out.orbits = std::move(found);
  return out;
}

Automorphism field_multiplier(const FiniteGroup& additive, const FiniteField& field,
                              FiniteField::Elem c) {
  if (c == 0 || c >= field.order()) throw InputError("multiplier must be a nonzero field element");
  if (additive.size() != field.order()) throw InputError("group is not the field's additive group");
  std::vector<Automorphism::Index> perm(field.order());
  for (FiniteField::Elem x = 0; x < field.order(); ++x) perm[x] = field.mul(c, x);
  return Automorphism::make(additive, std::move(perm));
}

Automorphism unit_multiplier(const FiniteGroup& cyclic, std::int64_t c) {
  const auto n = static_cast<std::int64_t>(cyclic.size());
  if (std::gcd(c, n) != 1) throw InputError("multiplier is not a unit modulo the group order");
  std::vector<Automorphism::Index> perm(cyclic.size());
  for (std::int64_t x = 0; x < n; ++x)
    perm[x] = static_cast<Automorphism::Index>((((c % n) + n) % n * x) % n);
  return Automorphism::make(cyclic, std::move(perm));
}

Automorphism inner_automorphism(const FiniteGroup& g, FiniteGroup::Index a) {
  if (a >= g.size()) throw InputError("element out of range");
  std::vector<Automorphism::Index> perm(g.size());
  for (FiniteGroup::Index x = 0; x < g.size(); ++x) perm[x] = g.op(g.op(a, x), g.inverse(a));
  return Automorphism::make(g, std::move(perm));
}

Automorphism linear_automorphism(const FiniteGroup& elementary_abelian, std::int64_t p, unsigned d,
                                 const std::vector<std::int64_t>& matrix) {
  if (matrix.size() != static_cast<std::size_t>(d) * d) throw InputError("matrix must be d x d");
  const std::size_t n = elementary_abelian.size();
  std::vector<Automorphism::Index> perm(n);
  std::vector<std::int64_t> v(d), w(d);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t t = x;
    for (unsigned i = 0; i < d; ++i, t /= p) v[i] = static_cast<std::int64_t>(t % p);
    std::size_t image = 0, place = 1;
    for (unsigned i = 0; i < d; ++i, place *= p) {
      std::int64_t s = 0;
      for (unsigned j = 0; j < d; ++j) s += matrix[i * d + j] * v[j];
      image += place * static_cast<std::size_t>(((s % p) + p) % p);
    }
    perm[x] = static_cast<Automorphism::Index>(image);
  }
  return Automorphism::make(elementary_abelian, std::move(perm));
}

}  // namespace mvg::algebra
