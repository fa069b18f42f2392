#pragma once

#include <array>
#include <cstdint>

#include "mvg/srg/params.hpp"

// Closed-form parameters of the affine rank 3 families, with the side
// conditions of each family. Violations raise InputError.
namespace mvg::srg {

// Van Lint-Schrijver tuples whose parameters coincide with other families.
inline constexpr std::array<std::array<std::int64_t, 3>, 8> kVlsExcluded = {{
    {2, 3, 2}, {5, 3, 1}, {2, 3, 3}, {3, 5, 1}, {2, 5, 2}, {3, 7, 1}, {2, 11, 1}, {2, 13, 1}}};

// p^s disjoint cliques of size p^t.
SrgParams clique_union_params(std::int64_t p, std::int64_t t, std::int64_t s);
// q x q rook graph, q >= 2.
SrgParams grid_params(std::int64_t q);
// Conference parameters on a prime power v = 4t+1.
SrgParams paley_params(std::int64_t v);
// c an odd prime, ord_c(p) = c-1, tuple not excluded; v = p^((c-1)t).
SrgParams vls_params(std::int64_t p, std::int64_t c, std::int64_t t);
// 2 x e matrices, rank-1 differences; e >= 3.
SrgParams bilinear_params(std::int64_t q, std::int64_t e);
// eps = +1 or -1, e >= 2, (q, eps) != (2, +1).
SrgParams polar_params(std::int64_t q, std::int64_t e, int eps);
SrgParams polar_plus_complement_params(std::int64_t e);
SrgParams alternating_params(std::int64_t q);
SrgParams half_spin_params(std::int64_t q);

// (p, s) with q = p^s, or InputError naming `what`.
std::pair<std::int64_t, unsigned> require_prime_power(std::int64_t q, const char* what);

}  // namespace mvg::srg
