#include "mvg/algebra/finite_field.hpp"

#include <numeric>

#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg::algebra {
namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor over GF(p).
Poly poly_rem(Poly a, const Poly& monic, std::int64_t p) {
  trim(a);
  const std::size_t dd = monic.size() - 1;
  while (a.size() > dd) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      a[shift + i] = ((a[shift + i] - lead * monic[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::size_t s = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= s; ++d) {
    const std::int64_t count = checked_pow(p, static_cast<unsigned>(d));
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::int64_t v = idx;
      for (std::size_t i = 0; i < d; ++i, v /= p) g[i] = v % p;
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::int64_t p, unsigned s) {
  const std::int64_t count = checked_pow(p, s);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of idx, so idx order is
    // lexicographic order on (c_0, c_1, ..., c_{s-1}).
    Poly f(s + 1, 0);
    std::int64_t v = idx;
    for (unsigned j = 0; j < s; ++j, v /= p) f[s - 1 - j] = v % p;
    f[s] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

FiniteField FiniteField::make(std::int64_t p, unsigned s, const Limits& limits) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (s < 1) throw InputError("field degree must be at least 1");
  const std::int64_t q = pow_capped(p, s, static_cast<std::int64_t>(limits.group));
  if (q < 0) throw ResourceError("field order " + std::to_string(p) + "^" + std::to_string(s) +
                                 " exceeds the size cap");

  FiniteField f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = static_cast<std::size_t>(q);
  f.modulus_ = least_irreducible(p, s);

  // Multiply-by-candidate on coefficient vectors until a generator of the
  // multiplicative group turns up.
  auto to_poly = [&](std::int64_t a) {
    Poly c(s, 0);
    for (unsigned i = 0; i < s; ++i, a /= p) c[i] = a % p;
    return c;
  };
  auto to_index = [&](const Poly& c) {
    std::int64_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  };
  auto mul_mod = [&](const Poly& a, const Poly& b) {
    Poly r(2 * s, 0);
    for (unsigned i = 0; i < s; ++i)
      for (unsigned j = 0; j < s; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    r = poly_rem(r, f.modulus_, p);
    r.resize(s, 0);
    return r;
  };

  const std::size_t units = f.q_ - 1;
  for (std::int64_t cand = 1; cand < q; ++cand) {
    const Poly g = to_poly(cand);
    std::vector<Elem> powers{1};
    Poly x = to_poly(1);
    for (;;) {
      x = mul_mod(x, g);
      const auto idx = static_cast<Elem>(to_index(x));
      if (idx == 1) break;
      powers.push_back(idx);
    }
    if (powers.size() == units) {
      f.exp_ = std::move(powers);
      break;
    }
  }
  if (f.exp_.size() != units) throw InternalError("multiplicative group is not cyclic");
  f.log_.assign(f.q_, -1);
  for (std::size_t k = 0; k < units; ++k) f.log_[f.exp_[k]] = static_cast<std::int64_t>(k);
  return f;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    const Elem da = a % p_, db = b % p_;
    r += place * ((da + db) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    const Elem da = a % p_;
    r += place * ((p_ - da) % p_);
    a /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InputError("zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw InputError("zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  return exp(log_[a] * (e % static_cast<std::int64_t>(q_ - 1)));
}

FiniteField::Elem FiniteField::exp(std::int64_t k) const {
  const auto units = static_cast<std::int64_t>(q_ - 1);
  return exp_[((k % units) + units) % units];
}

std::int64_t FiniteField::log(Elem a) const {
  if (a == 0 || a >= q_) throw InputError("log is defined for nonzero elements only");
  return log_[a];
}

bool FiniteField::is_nonzero_power(Elem a, std::int64_t c) const {
  if (a == 0) return false;
  return log_[a] % std::gcd(c, static_cast<std::int64_t>(q_ - 1)) == 0;
}

FiniteField::Elem FiniteField::from_int(std::int64_t n) const {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

std::vector<std::int64_t> FiniteField::digits(Elem a) const {
  std::vector<std::int64_t> out(s_);
  for (unsigned i = 0; i < s_; ++i, a /= p_) out[i] = a % p_;
  return out;
}

}  // namespace mvg::algebra
