#pragma once

#include <vector>

#include "mvg/algebra/finite_group.hpp"
#include "mvg/srg/graph.hpp"

// Graph constructions. Each family builder checks its output with srg_check
// against the closed form in family_params.hpp; a mismatch is an
// InternalError.
namespace mvg::srg {

// Vertices are group elements; g ~ h iff h g^-1 is in the connection set,
// which must avoid the identity and be inverse-closed.
Graph cayley_graph(const algebra::FiniteGroup& g,
                   const std::vector<algebra::FiniteGroup::Index>& connection,
                   const Limits& limits = {});

// x ~ y iff y - x is a nonzero square; q = 1 mod 4.
Graph paley_graph(std::int64_t q, const Limits& limits = {});
// x -> y iff y - x is a nonzero square; q = 3 mod 4.
DirectedGraph paley_tournament(std::int64_t q, const Limits& limits = {});

Graph clique_union(std::int64_t p, std::int64_t t, std::int64_t s, const Limits& limits = {});
Graph grid_graph(std::int64_t q, const Limits& limits = {});
// x ~ y iff y - x is a nonzero c-th power in GF(p^((c-1)t)).
Graph vanlint_schrijver(std::int64_t p, std::int64_t c, std::int64_t t, const Limits& limits = {});
// x ~ y iff Q(x - y) = 0, x != y, on GF(q)^(2e).
Graph affine_polar(std::int64_t q, std::int64_t e, int eps, const Limits& limits = {});
Graph affine_polar_plus_complement(std::int64_t e, const Limits& limits = {});
// 2 x e matrices over GF(q), adjacent iff the difference has rank 1.
Graph bilinear_forms_graph(std::int64_t q, std::int64_t e, const Limits& limits = {});
// 5 x 5 alternating matrices over GF(q), adjacent iff the difference has rank 2.
Graph alternating_forms_graph(std::int64_t q, const Limits& limits = {});

}  // namespace mvg::srg
