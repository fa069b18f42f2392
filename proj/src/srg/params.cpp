#include "mvg/srg/params.hpp"

#include <numeric>

#include "mvg/core/axioms.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg::srg {

SrgParams SrgParams::make(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  SrgParams p{v, k, lambda, mu};
  auto fail = [&](const std::string& why) {
    throw ParameterError("(" + std::to_string(v) + "," + std::to_string(k) + "," +
                         std::to_string(lambda) + "," + std::to_string(mu) + "): " + why);
  };
  if (!(0 < k && k < v - 1)) fail("need 0 < k < v-1");
  if (lambda < 0 || mu < 0) fail("lambda and mu must be nonnegative");
  if (lambda > k - 1 || mu > k) fail("need lambda <= k-1 and mu <= k");
  if (checked_mul(k, k - 1 - lambda) != checked_mul(v - k - 1, mu))
    fail("k(k-1-lambda) != (v-k-1)mu");
  if (v - 2 * k + mu - 2 < 0 || v - 2 * k + lambda < 0) fail("complement parameters negative");
  return p;
}

std::string SrgParams::str() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const std::size_t v = g.order();
  if (v < 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex u = 1; u < v; ++u)
    if (g.degree(u) != k) return std::nullopt;
  if (k == 0 || k + 1 == v) return std::nullopt;
  std::int64_t lambda = -1, mu = -1;
  for (Vertex u = 0; u < v; ++u)
    for (Vertex w = u + 1; w < v; ++w) {
      auto c = static_cast<std::int64_t>(g.common_neighbors(u, w));
      auto& slot = g.adjacent(u, w) ? lambda : mu;
      if (slot < 0) slot = c;
      else if (slot != c) return std::nullopt;
    }
  // 0 < k < v-1 guarantees both classes are nonempty.
  return SrgParams::make(static_cast<std::int64_t>(v), static_cast<std::int64_t>(k), lambda, mu);
}

SrgParams complement_params(const SrgParams& p) {
  return SrgParams::make(p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda);
}

IntersectionNumbers intersection_numbers(const SrgParams& p) {
  const auto q = complement_params(p);
  IntersectionNumbers in;
  in.d = {1, p.k, q.k};
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) in.c[0][s][t] = in.c[s][0][t] = (s == t);
  in.c[1][1] = {p.k, p.lambda, p.mu};
  in.c[2][2] = {q.k, q.mu, q.lambda};
  in.c[1][2] = in.c[2][1] = {0, p.k - 1 - p.lambda, p.k - p.mu};
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      std::int64_t sum = 0;
      for (int t = 0; t < 3; ++t) sum += in.c[r][s][t] * in.d[t];
      if (sum != in.d[r] * in.d[s])
        throw InternalError("intersection numbers of " + p.str() + " are not a representation");
    }
  return in;
}

MultivaluedGroup mvgroup_from_params(const SrgParams& p) {
  const auto in = intersection_numbers(p);
  const std::int64_t n = checked_lcm(in.d[1], in.d[2]);
  std::vector<std::int64_t> table(27);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t) {
        const std::int64_t num = checked_mul(checked_mul(n, in.c[r][s][t]), in.d[t]);
        const std::int64_t den = in.d[r] * in.d[s];
        if (num % den != 0)
          throw InternalError("non-integral multiplicity for " + p.str());
        table[(r * 3 + s) * 3 + t] = num / den;
      }
  auto g = MultivaluedGroup::from_table(n, 0, {0, 1, 2}, std::move(table));
  try {
    require_involutive_group(g);
  } catch (const NotAGroupError& e) {
    throw InternalError("group built from " + p.str() + " fails an axiom: " + e.what());
  }
  return g;
}

}  // namespace mvg::srg
