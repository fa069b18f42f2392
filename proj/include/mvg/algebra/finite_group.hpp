#pragma once

#include <cstdint>
#include <vector>

#include "mvg/algebra/finite_field.hpp"
#include "mvg/core/limits.hpp"

namespace mvg::algebra {

// An explicit finite group given by its multiplication table.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  // op[a * size + b] = a*b. Validates closure, identity and inverses on all
  // elements and associativity on all triples (size <= 256) or on a fixed
  // pseudo-random sample of triples. Throws InputError / ResourceError.
  static FiniteGroup from_table(std::size_t size, std::vector<Index> op, const Limits& limits = {});

  std::size_t size() const { return size_; }
  Index op(Index a, Index b) const { return op_[a * size_ + b]; }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inv_[a]; }
  const std::vector<Index>& table() const { return op_; }

 private:
  FiniteGroup() = default;

  std::size_t size_ = 0;
  std::vector<Index> op_;
  Index identity_ = 0;
  std::vector<Index> inv_;
};

// Additive group of GF(p)^d; index = base-p encoding of the vector.
FiniteGroup make_elementary_abelian(std::int64_t p, unsigned d, const Limits& limits = {});

// Additive group of a field, with the field's element encoding.
FiniteGroup make_additive_group(const FiniteField& field, const Limits& limits = {});

// Z/n under addition.
FiniteGroup make_cyclic(std::size_t n, const Limits& limits = {});

// Dihedral group of order 2n: r^i is i, s r^i is n + i.
FiniteGroup make_dihedral(std::size_t n, const Limits& limits = {});

// Symmetric group on k points, elements in lexicographic order of their
// image arrays; composition (a*b)(i) = a(b(i)).
FiniteGroup make_symmetric(unsigned k, const Limits& limits = {});

}  // namespace mvg::algebra
