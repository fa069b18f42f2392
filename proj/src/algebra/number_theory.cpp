#include "mvg/algebra/number_theory.hpp"

#include <cmath>
#include <numeric>

#include "mvg/core/error.hpp"

namespace mvg::algebra {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::optional<PrimePower> is_prime_power(std::int64_t v) {
  if (v == 0) throw InputError("is_prime_power: v must be positive");
  if (v < 2) return std::nullopt;
  std::int64_t p = v;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      p = d;
      break;
    }
  unsigned d = 0;
  while (v % p == 0) {
    v /= p;
    ++d;
  }
  if (v != 1) return std::nullopt;
  return PrimePower{p, d};
}

std::int64_t mult_order(std::int64_t p, std::int64_t m) {
  if (m < 2 || std::gcd(p, m) != 1) throw InputError("mult_order requires m >= 2 and gcd(p, m) = 1");
  const std::int64_t base = ((p % m) + m) % m;
  std::int64_t x = base;
  for (std::int64_t t = 1; t <= m; ++t) {
    if (x == 1) return t;
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * base) % m);
  }
  throw InternalError("mult_order did not terminate");
}

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

bool is_sum_of_two_squares(std::int64_t v) {
  if (v < 0) return false;
  for (std::int64_t a = 0; a * a <= v; ++a)
    if (exact_sqrt(v - a * a)) return true;
  return false;
}

}  // namespace mvg::algebra
