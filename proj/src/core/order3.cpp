#include "mvg/core/order3.hpp"

#include <array>
#include <string>

#include "mvg/core/axioms.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg {
namespace {

constexpr Element kE = 0, kX = 1, kY = 2;

using Rows = std::array<std::array<std::array<std::int64_t, 3>, 3>, 3>;

MultivaluedGroup order3_group(std::int64_t n, std::vector<Element> star, const Rows& rows) {
  for (const auto& plane : rows)
    for (const auto& row : plane)
      for (std::int64_t m : row)
        if (m < 0) throw ParameterError("parameters give a negative multiplicity");
  std::vector<std::int64_t> table;
  table.reserve(27);
  for (const auto& plane : rows)
    for (const auto& row : plane) table.insert(table.end(), row.begin(), row.end());
  auto g = MultivaluedGroup::from_table(n, kE, std::move(star), std::move(table), {"e", "x", "y"});
  require_involutive_group(g);
  return g;
}

// numerator/denominator as an integer, or ParameterError naming what.
std::int64_t exact_quotient(std::int64_t numerator, std::int64_t denominator, const char* what) {
  if (numerator % denominator != 0)
    throw ParameterError(std::string(what) + " = " + std::to_string(numerator) + "/" +
                         std::to_string(denominator) + " is not an integer");
  return numerator / denominator;
}

}  // namespace

MultivaluedGroup build_type1(std::int64_t n, std::int64_t m1, std::int64_t m2, std::int64_t a) {
  if (n < 1 || m1 < 1 || m2 < 1 || a < 0)
    throw ParameterError("type1 requires n >= 1, m1 >= 1, m2 >= 1, a >= 0");
  const std::int64_t xx_y = n - m1 - a;
  if (xx_y < 0) throw ParameterError("type1 requires m1 + a <= n");
  const std::int64_t axy = exact_quotient(checked_mul(m2, xx_y), m1, "a(x,y)");
  const std::int64_t ayy = exact_quotient(checked_mul(m2, n - axy), m1, "m[y][y][x]");

  Rows t{};
  t[kE][kE][kE] = n;
  t[kE][kX][kX] = t[kX][kE][kX] = n;
  t[kE][kY][kY] = t[kY][kE][kY] = n;
  t[kX][kX] = {m1, a, xx_y};
  t[kX][kY] = t[kY][kX] = {0, axy, n - axy};
  t[kY][kY] = {m2, ayy, n - m2 - ayy};
  return order3_group(n, {kE, kX, kY}, t);
}

MultivaluedGroup build_type2(std::int64_t n, std::int64_t a) {
  if (n < 1 || a < 0 || 2 * a > n) throw ParameterError("type2 requires n >= 1 and 0 <= 2a <= n");
  Rows t{};
  t[kE][kE][kE] = n;
  t[kE][kX][kX] = t[kX][kE][kX] = n;
  t[kE][kY][kY] = t[kY][kE][kY] = n;
  t[kX][kX] = {0, a, n - a};
  t[kY][kY] = {0, n - a, a};
  t[kX][kY] = t[kY][kX] = {n - 2 * a, a, a};
  return order3_group(n, {kE, kY, kX}, t);
}

MultivaluedGroup build_xk(std::int64_t k) {
  if (k < 0) throw ParameterError("X(k) requires k >= 0");
  return build_type2(checked_add(checked_mul(2, k), 1), k);
}

std::pair<Element, Element> canonical_pair(const MultivaluedGroup& g) {
  if (g.order() != 3) throw UnsupportedError("canonical forms are defined for order 3 only");
  std::vector<Element> others;
  for (Element u = 0; u < 3; ++u)
    if (u != g.identity()) others.push_back(u);
  const Element u = others[0], v = others[1];
  if (g.star(u) == v) return {u, v};
  auto key = [&](Element w) {
    return std::pair{g.unit_multiplicity(w), g.m(w, w, w)};
  };
  return key(v) > key(u) ? std::pair{v, u} : std::pair{u, v};
}

Signature signature(const MultivaluedGroup& g) {
  if (g.order() != 3) throw UnsupportedError("signature is defined for order 3 only");
  if (!verify_involutive(g).involutive) throw InputError("signature requires an involutive group");
  const auto [u, v] = canonical_pair(g);
  const std::int64_t n = g.valency();
  Signature sig;
  if (g.star(u) == v) {
    sig.kind = Signature::Kind::kSwapStar;
    sig.ratios = {Ratio(g.m(u, u, u), n)};
  } else {
    sig.kind = Signature::Kind::kSymmetricStar;
    sig.ratios = {Ratio(g.unit_multiplicity(u), n), Ratio(g.unit_multiplicity(v), n),
                  Ratio(g.m(u, u, u), n)};
  }
  return sig;
}

}  // namespace mvg
