#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "mvg/core/multivalued_group.hpp"
#include "mvg/srg/graph.hpp"

namespace mvg::srg {

struct SrgParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;

  // ParameterError unless 0 < k < v-1, k(k-1-lambda) = (v-k-1)mu, and all
  // four complement/intersection quantities are nonnegative.
  static SrgParams make(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu);

  std::int64_t kbar() const { return v - k - 1; }
  std::string str() const;
  auto operator<=>(const SrgParams&) const = default;
};

// Common-neighbour counts by bitset intersection, O(v^3 / 64).
std::optional<SrgParams> srg_check(const Graph& g);

// (v, v-k-1, v-2k+mu-2, v-2k+lambda).
SrgParams complement_params(const SrgParams& p);

// c[r][s][t]: A_r A_s = sum_t c[r][s][t] A_t with A_0 = I, A_1 = A, A_2 = complement.
struct IntersectionNumbers {
  std::array<std::array<std::array<std::int64_t, 3>, 3>, 3> c{};
  std::array<std::int64_t, 3> d{};
};

IntersectionNumbers intersection_numbers(const SrgParams& p);

// The lcm(k, kbar)-valued group on {x0, x1, x2}, x0 the identity and every
// element self-inverse, with m[r][s][t] = n c[r][s][t] d[t] / (d[r] d[s]).
MultivaluedGroup mvgroup_from_params(const SrgParams& p);

}  // namespace mvg::srg
