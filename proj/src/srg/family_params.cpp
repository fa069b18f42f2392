#include "mvg/srg/family_params.hpp"

#include <algorithm>

#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"

namespace mvg::srg {

using algebra::is_prime;
using algebra::is_prime_power;

std::pair<std::int64_t, unsigned> require_prime_power(std::int64_t q, const char* what) {
  if (q < 2) throw InputError(std::string(what) + " must be a prime power, got " + std::to_string(q));
  auto pp = is_prime_power(q);
  if (!pp) throw InputError(std::string(what) + " must be a prime power, got " + std::to_string(q));
  return {pp->p, static_cast<unsigned>(pp->d)};
}

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) { return checked_pow(b, static_cast<unsigned>(e)); }

}  // namespace

SrgParams clique_union_params(std::int64_t p, std::int64_t t, std::int64_t s) {
  if (!is_prime(p)) throw InputError("clique union: p must be prime");
  if (t < 1 || s < 1) throw InputError("clique union: need t, s >= 1");
  const auto pt = ipow(p, t);
  return SrgParams::make(ipow(p, t + s), pt - 1, pt - 2, 0);
}

SrgParams grid_params(std::int64_t q) {
  if (q < 2) throw InputError("grid: need q >= 2");
  return SrgParams::make(checked_mul(q, q), 2 * (q - 1), q - 2, 2);
}

SrgParams paley_params(std::int64_t v) {
  require_prime_power(v, "Paley order");
  if (v % 4 != 1) throw InputError("Paley graph needs q = 1 mod 4");
  const auto t = (v - 1) / 4;
  return SrgParams::make(v, 2 * t, t - 1, t);
}

SrgParams vls_params(std::int64_t p, std::int64_t c, std::int64_t t) {
  if (!is_prime(p)) throw InputError("Van Lint-Schrijver: p must be prime");
  if (c <= 2 || !is_prime(c)) throw InputError("Van Lint-Schrijver: c must be an odd prime");
  if (t < 1) throw InputError("Van Lint-Schrijver: need t >= 1");
  if (p == c || algebra::mult_order(p, c) != c - 1)
    throw InputError("Van Lint-Schrijver: need ord_c(p) = c-1");
  const std::array<std::int64_t, 3> tuple{p, c, t};
  if (std::find(kVlsExcluded.begin(), kVlsExcluded.end(), tuple) != kVlsExcluded.end())
    throw InputError("Van Lint-Schrijver: tuple (" + std::to_string(p) + "," + std::to_string(c) +
                     "," + std::to_string(t) + ") is excluded");
  const auto v = ipow(p, (c - 1) * t);
  const auto root = algebra::exact_sqrt(v);
  if (!root) throw InternalError("Van Lint-Schrijver: v is not a square");
  const std::int64_t sign = (t % 2 == 0) ? 1 : -1;
  const std::int64_t c2 = c * c;
  const auto lnum = v - 3 * c + 1 - sign * (c - 2) * (c - 1) * *root;
  const auto mnum = v - c + 1 + sign * (c - 2) * *root;
  if ((v - 1) % c != 0 || lnum % c2 != 0 || mnum % c2 != 0)
    throw InternalError("Van Lint-Schrijver: non-integral parameters");
  return SrgParams::make(v, (v - 1) / c, lnum / c2, mnum / c2);
}

SrgParams bilinear_params(std::int64_t q, std::int64_t e) {
  require_prime_power(q, "q");
  if (e < 3) throw InputError("bilinear forms: need e >= 3");
  const auto qe = ipow(q, e);
  return SrgParams::make(checked_mul(qe, qe), (q + 1) * (qe - 1), qe + (q - 2) * (q + 1),
                         q * (q + 1));
}

SrgParams polar_params(std::int64_t q, std::int64_t e, int eps) {
  require_prime_power(q, "q");
  if (e < 2) throw InputError("affine polar: need e >= 2");
  if (eps != 1 && eps != -1) throw InputError("affine polar: epsilon must be + or -");
  if (q == 2 && eps == 1) throw InputError("affine polar: (q, eps) = (2, +) is excluded");
  const auto qe = ipow(q, e), qe1 = ipow(q, e - 1), qe2 = ipow(q, e - 2);
  return SrgParams::make(checked_mul(qe, qe), (qe - eps) * (qe1 + eps),
                         q * (qe1 - eps) * (qe2 + eps) + q - 2, qe1 * (qe1 + eps));
}

SrgParams polar_plus_complement_params(std::int64_t e) {
  if (e < 2) throw InputError("affine polar complement: need e >= 2");
  const auto h = ipow(2, e - 1);
  return SrgParams::make(ipow(2, 2 * e), h * (2 * h - 1), h * (h - 1), h * (h - 1));
}

SrgParams alternating_params(std::int64_t q) {
  require_prime_power(q, "q");
  const auto q2 = q * q, q4 = ipow(q, 4), q5 = ipow(q, 5);
  return SrgParams::make(ipow(q, 10), (q2 + 1) * (q5 - 1), q5 + q4 - q2 - 2, q2 * (q2 + 1));
}

SrgParams half_spin_params(std::int64_t q) {
  require_prime_power(q, "q");
  const auto q3 = ipow(q, 3), q6 = ipow(q, 6), q8 = ipow(q, 8);
  return SrgParams::make(ipow(q, 16), (q3 + 1) * (q8 - 1), q8 + q6 - q3 - 2, q3 * (q3 + 1));
}

}  // namespace mvg::srg
