#pragma once

#include <optional>
#include <vector>

#include "mvg/core/multivalued_group.hpp"

namespace mvg {

// A bijection f with f(e1) = e2 and m1[x][y][z]/n1 = m2[fx][fy][fz]/n2 for
// all triples, if one exists. Order-3 involutive groups are decided by
// signature; everything else by backtracking over identity-preserving
// bijections.
std::optional<std::vector<Element>> are_isomorphic(const MultivaluedGroup& g1,
                                                   const MultivaluedGroup& g2);

// True iff f is an isomorphism g1 -> g2 in the above sense.
bool is_isomorphism(const MultivaluedGroup& g1, const MultivaluedGroup& g2,
                    const std::vector<Element>& f);

}  // namespace mvg
