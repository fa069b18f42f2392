#include "mvg/algebra/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg::algebra {
namespace {

void check_cap(std::size_t size, const Limits& limits) {
  if (size > limits.group)
    throw ResourceError("group order " + std::to_string(size) + " exceeds the size cap");
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t size, std::vector<Index> op, const Limits& limits) {
  if (size == 0) throw InputError("a group needs at least one element");
  check_cap(size, limits);
  if (op.size() != size * size) throw InputError("group table must be size x size");
  for (Index v : op)
    if (v >= size) throw InputError("group table entry out of range");

  FiniteGroup g;
  g.size_ = size;
  g.op_ = std::move(op);

  bool found = false;
  for (Index e = 0; e < size && !found; ++e) {
    bool ok = true;
    for (Index a = 0; a < size && ok; ++a) ok = g.op(e, a) == a && g.op(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity element");

  g.inv_.assign(size, static_cast<Index>(size));
  for (Index a = 0; a < size; ++a) {
    for (Index b = 0; b < size; ++b)
      if (g.op(a, b) == g.identity_) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] == size || g.op(g.inv_[a], a) != g.identity_)
      throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
  }

  auto assoc = [&](Index a, Index b, Index c) { return g.op(g.op(a, b), c) == g.op(a, g.op(b, c)); };
  if (size <= 256) {
    for (Index a = 0; a < size; ++a)
      for (Index b = 0; b < size; ++b)
        for (Index c = 0; c < size; ++c)
          if (!assoc(a, b, c)) throw InputError("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(size - 1));
    for (int i = 0; i < 200000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw InputError("group table is not associative");
  }
  return g;
}

FiniteGroup make_elementary_abelian(std::int64_t p, unsigned d, const Limits& limits) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (d < 1) throw InputError("dimension must be at least 1");
  const std::int64_t size = pow_capped(p, d, static_cast<std::int64_t>(limits.group));
  if (size < 0) throw ResourceError("group order exceeds the size cap");
  const auto q = static_cast<std::size_t>(size);
  std::vector<FiniteGroup::Index> op(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (unsigned i = 0; i < d; ++i, x /= p, y /= p, place *= p)
        r += place * ((x % p + y % p) % p);
      op[a * q + b] = static_cast<FiniteGroup::Index>(r);
    }
  return FiniteGroup::from_table(q, std::move(op), limits);
}

FiniteGroup make_additive_group(const FiniteField& field, const Limits& limits) {
  const std::size_t q = field.order();
  check_cap(q, limits);
  std::vector<FiniteGroup::Index> op(q * q);
  for (FiniteField::Elem a = 0; a < q; ++a)
    for (FiniteField::Elem b = 0; b < q; ++b) op[a * q + b] = field.add(a, b);
  return FiniteGroup::from_table(q, std::move(op), limits);
}

FiniteGroup make_cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  check_cap(n, limits);
  std::vector<FiniteGroup::Index> op(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a * n + b] = static_cast<FiniteGroup::Index>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(op), limits);
}

FiniteGroup make_dihedral(std::size_t n, const Limits& limits) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  const std::size_t size = 2 * n;
  check_cap(size, limits);
  // Element (f, i) = s^f r^i; r^i s = s r^{-i}.
  std::vector<FiniteGroup::Index> op(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const std::size_t fa = a / n, ia = a % n, fb = b / n, ib = b % n;
      const std::size_t i = fb ? (n - ia + ib) % n : (ia + ib) % n;
      op[a * size + b] = static_cast<FiniteGroup::Index>(((fa ^ fb) * n) + i);
    }
  return FiniteGroup::from_table(size, std::move(op), limits);
}

FiniteGroup make_symmetric(unsigned k, const Limits& limits) {
  if (k < 1) throw InputError("symmetric group needs k >= 1");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
    check_cap(perms.size(), limits);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<unsigned>, FiniteGroup::Index> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<FiniteGroup::Index>(i);
  const std::size_t size = perms.size();
  std::vector<FiniteGroup::Index> op(size * size);
  std::vector<unsigned> c(k);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      for (unsigned i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      op[a * size + b] = index.at(c);
    }
  return FiniteGroup::from_table(size, std::move(op), limits);
}

}  // namespace mvg::algebra
