#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "mvg/core/multivalued_group.hpp"

namespace mvg {

using Ratio = boost::rational<std::int64_t>;

// Order-3 involutive groups on {e, x, y} = {0, 1, 2}.
//
// Symmetric star (x* = x, y* = y), with r = m2/m1:
//   x*x = {e: m1, x: a, y: n-m1-a}
//   x*y = y*x = {x: axy, y: n-axy},           axy = r(n-m1-a)
//   y*y = {e: m2, x: ayy, y: n-m2-ayy},       ayy = r(n-axy)
// Every entry must be a nonnegative integer; the table is then verified.
MultivaluedGroup build_type1(std::int64_t n, std::int64_t m1, std::int64_t m2, std::int64_t a);

// Swap star (x* = y):
//   x*x = {x: a, y: n-a},  y*y = {x: n-a, y: a},  x*y = y*x = {e: n-2a, x: a, y: a}.
MultivaluedGroup build_type2(std::int64_t n, std::int64_t a);

// X(k) = build_type2(2k+1, k).
MultivaluedGroup build_xk(std::int64_t k);

// Isomorphism invariant of an order-3 involutive group: the multiplicities
// divided by the valency, in lowest terms.
struct Signature {
  enum class Kind { kSymmetricStar, kSwapStar };

  Kind kind = Kind::kSymmetricStar;
  // SymmetricStar: (m1/n, m2/n, a/n). SwapStar: (a/n).
  std::vector<Ratio> ratios;

  bool operator==(const Signature&) const = default;
};

Signature signature(const MultivaluedGroup& g);

// The two non-identity elements in signature order: larger m/n first, then
// larger diagonal m[u][u][u]. For swap-star groups the order is by index.
std::pair<Element, Element> canonical_pair(const MultivaluedGroup& g);

}  // namespace mvg
