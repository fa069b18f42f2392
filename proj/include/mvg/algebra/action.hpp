#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mvg/algebra/finite_field.hpp"
#include "mvg/algebra/finite_group.hpp"
#include "mvg/core/limits.hpp"

namespace mvg::algebra {

// A permutation of a group's index set that respects the multiplication.
class Automorphism {
 public:
  using Index = FiniteGroup::Index;

  // Throws InputError unless perm is a bijection with perm(e) = e and
  // perm(ab) = perm(a)perm(b) for all a, b.
  static Automorphism make(const FiniteGroup& g, std::vector<Index> perm);
  static Automorphism identity(const FiniteGroup& g);

  Index operator()(Index x) const { return perm_[x]; }
  const std::vector<Index>& perm() const { return perm_; }
  std::size_t size() const { return perm_.size(); }

  // (a.then(b))(x) = b(a(x)).
  Automorphism then(const Automorphism& next) const;

  auto operator<=>(const Automorphism&) const = default;

 private:
  explicit Automorphism(std::vector<Index> perm) : perm_(std::move(perm)) {}
  std::vector<Index> perm_;
};

// A finite group of automorphisms A <= Aut(G), listed without repeats in
// lexicographic order of the image arrays. The identity is always present.
class ActionGroup {
 public:
  const std::vector<Automorphism>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  friend ActionGroup close_action(const FiniteGroup&, const std::vector<Automorphism>&,
                                  const Limits&);
  std::vector<Automorphism> elements_;
};

// Breadth-first closure of the generators under composition. Throws
// InputError for a generator of the wrong size, ResourceError past
// limits.action.
ActionGroup close_action(const FiniteGroup& g, const std::vector<Automorphism>& generators,
                         const Limits& limits = {});

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;                   // element -> orbit
  std::vector<std::vector<FiniteGroup::Index>> orbits;  // each sorted ascending
};

// Orbits of A on G; the identity's singleton first, the rest by least element.
OrbitPartition orbits(const FiniteGroup& g, const ActionGroup& a);

// x -> c x on the additive group of a field (c != 0).
Automorphism field_multiplier(const FiniteGroup& additive, const FiniteField& field,
                              FiniteField::Elem c);

// x -> c x on Z/n, gcd(c, n) = 1.
Automorphism unit_multiplier(const FiniteGroup& cyclic, std::int64_t c);

// x -> a x a^-1.
Automorphism inner_automorphism(const FiniteGroup& g, FiniteGroup::Index a);

// x -> M x on GF(p)^d (base-p encoding), M given row-major over GF(p).
Automorphism linear_automorphism(const FiniteGroup& elementary_abelian, std::int64_t p, unsigned d,
                                 const std::vector<std::int64_t>& matrix);

}  // namespace mvg::algebra
