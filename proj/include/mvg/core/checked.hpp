#pragma once

#include <cstdint>
#include <numeric>

#include "mvg/core/error.hpp"

namespace mvg {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in multiplication");
  return r;
}

// base^exp, throwing on overflow.
inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// base^exp, or -1 if the result exceeds limit.
inline std::int64_t pow_capped(std::int64_t base, unsigned exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r) || r > limit) return -1;
  }
  return r;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace mvg
