#pragma once

#include <cstdint>
#include <vector>

#include "mvg/core/limits.hpp"

namespace mvg::algebra {

// GF(p^s). Element i encodes the polynomial sum_j c_j t^j over GF(p) whose
// coefficients are the base-p digits of i, c_0 least significant. The
// modulus is the lexicographically least monic irreducible of degree s,
// comparing coefficients from c_0 upward.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws InputError if p is not prime or s < 1, ResourceError if p^s
  // exceeds limits.group.
  static FiniteField make(std::int64_t p, unsigned s, const Limits& limits = {});

  std::int64_t characteristic() const { return p_; }
  unsigned degree() const { return s_; }
  std::size_t order() const { return q_; }
  // Coefficients c_0..c_s of the modulus, c_s = 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // InputError for 0
  Elem pow(Elem a, std::int64_t e) const;

  // A fixed generator of the multiplicative group, with discrete logs.
  Elem primitive_element() const { return exp(1); }
  Elem exp(std::int64_t k) const;
  std::int64_t log(Elem a) const;  // InputError for 0

  // Nonzero c-th power, i.e. log(a) divisible by gcd(c, q-1).
  bool is_nonzero_power(Elem a, std::int64_t c) const;
  bool is_nonzero_square(Elem a) const { return is_nonzero_power(a, 2); }

  // The image of the integer n under Z -> GF(p).
  Elem from_int(std::int64_t n) const;

  std::vector<std::int64_t> digits(Elem a) const;

 private:
  FiniteField() = default;

  std::int64_t p_ = 0;
  unsigned s_ = 0;
  std::size_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<Elem> exp_;          // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::int64_t> log_;  // log_[a] for a != 0
};

inline FiniteField make_field(std::int64_t p, unsigned s, const Limits& limits = {}) {
  return FiniteField::make(p, s, limits);
}

}  // namespace mvg::algebra
