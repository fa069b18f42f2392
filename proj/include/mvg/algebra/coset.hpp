#pragma once

#include <span>

#include "mvg/algebra/action.hpp"
#include "mvg/algebra/finite_group.hpp"
#include "mvg/core/multivalued_group.hpp"

namespace mvg::algebra {

// The |A|-valued coset group on the A-orbits of G:
//   m[x][y][z] = #{a in A : g0 * a(h0) in z},
// with g0, h0 the least elements of x, y, and x* the orbit of g0^-1.
// The result is verified; a failing axiom raises InternalError.
//
// A non-faithful action A -> Aut(G) only multiplies every multiplicity by
// the kernel order, which gives an isomorphic multivalued group, so the
// faithful image is enough. See coset_group_of_homomorphism for the general
// form.
MultivaluedGroup coset_group(const FiniteGroup& g, const ActionGroup& a);

// Same construction for a homomorphism given by its images: images[i] is
// the automorphism of the i-th element of A (repeats allowed), n = |A|.
MultivaluedGroup coset_group_of_homomorphism(const FiniteGroup& g,
                                             std::span<const Automorphism> images,
                                             const Limits& limits = {});

// True iff the counting formula gives the same multiplicities for every
// choice of representatives g in x, h in y.
bool representatives_agree(const FiniteGroup& g, const ActionGroup& a);

}  // namespace mvg::algebra
