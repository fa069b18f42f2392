#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mvg::algebra {

struct PrimePower {
  std::int64_t p;
  unsigned d;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::int64_t v);

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// (p, d) with v = p^d, p prime, d >= 1. Throws InputError for v = 0.
std::optional<PrimePower> is_prime_power(std::int64_t v);

// Least t >= 1 with p^t = 1 mod m. Throws InputError unless gcd(p, m) = 1, m >= 2.
std::int64_t mult_order(std::int64_t p, std::int64_t m);

bool is_sum_of_two_squares(std::int64_t v);

// Exact integer square root, if v is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t v);

}  // namespace mvg::algebra
