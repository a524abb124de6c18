#pragma once

#include <cstddef>

#include "subdepth/permgroup.hpp"

namespace subdepth::builtin {

/// Symmetric group on {1..n}, generated by (1 2) and (1 2 ... n).
PermutationGroup symmetric(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
/// Alternating group on {1..n}, generated by the 3-cycles (1 2 k).
PermutationGroup alternating(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
/// Cyclic group generated by (1 2 ... n).
PermutationGroup cyclic(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
/// Dihedral group of ORDER n (so D(8) is the symmetry group of a square).
/// n must be even; D(2) = C(2) and D(4) = Klein.
PermutationGroup dihedral(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
/// {(), (1 2)(3 4), (1 3)(2 4), (1 4)(2 3)}.
PermutationGroup klein();
/// Centerless (Z/3)^3 : V4 of order 108 acting affinely on the 27 points of
/// F_3^3. V4 acts by the diagonal sign matrices diag(-1,-1,1) and
/// diag(-1,1,-1); points are numbered 1 + x1 + 3 x2 + 9 x3.
PermutationGroup g108();

}  // namespace subdepth::builtin
