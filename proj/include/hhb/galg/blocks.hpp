#pragma once

#include <cstdint>
#include <vector>

#include "hhb/galg/algebra.hpp"

namespace hhb::galg {

/// Least m with p^m = 1 modulo the p'-part of the exponent of G. GF(p^m)
/// splits kG and the group algebra of every subgroup of G.
unsigned splitting_degree(const grp::FiniteGroup& g, std::uint32_t p);

/// One class sum per conjugacy class, in class order.
std::vector<Vec> class_sums(const GroupAlgebra& a);

/// Z(kG) on the class-sum basis.
StructAlgebra center_algebra(const GroupAlgebra& a);

/// Primitive idempotents of a commutative algebra, in its coordinates.
/// Throws FieldTooSmall when some primitive idempotent e has eA/eJ of
/// dimension above 1, i.e. the field does not split A.
std::vector<Vec> primitive_idempotents(const StructAlgebra& z);

struct BlockIdempotent {
  Vec idem;              // coefficients in kG
  Vec center_coords;     // coefficients on the class sums
  std::size_t dim = 0;   // dim b kG
  std::size_t center_dim = 0;  // dim b Z(kG)
};

/// Central primitive idempotents of kG ordered by (dim, coefficients).
std::vector<BlockIdempotent> block_idempotents(const GroupAlgebra& a);

}  // namespace hhb::galg
