#pragma once

#include <vector>

#include "hhb/cohom/module.hpp"

namespace hhb::cohom {

constexpr std::size_t kDefaultResolutionCap = 20000;

/// A free resolution ... -> F_1 -> F_0 -> k of the trivial module with
/// F_i = (kG)^{r_i}. An element of F_i is a vector indexed by (j, g) at
/// position j*|G| + g. generators[i][j] is the image of the j-th basis
/// element under d_i, a vector of F_{i-1}; d_0 is the augmentation, with
/// generators[0] = {(1)} in k.
struct Resolution {
  GroupPtr group;
  la::FieldPtr field;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Vec>> generators;

  /// Number of boundary maps after d_0; cohomology is available in degrees
  /// below this.
  std::size_t length() const { return ranks.size() - 1; }
  /// Matrix of d_i: row (j, g) is g * generators[i][j].
  Mat boundary(std::size_t i) const;
};

/// Resolution with F_0 .. F_{n+1}, so that H^0 .. H^n can be computed. The
/// rank r_i is the least number of generators of Omega^i(k) = ker d_{i-1},
/// which is dim(Omega / J Omega) for p-groups. Throws CapExceeded when some
/// r_i |G| exceeds cap, FieldTooSmall when the field does not split kG.
Resolution build_resolution(GroupPtr group, la::FieldPtr field, unsigned n, std::size_t cap = kDefaultResolutionCap);

/// x * v for x in kG and v in (kG)^r.
Vec act_free(const grp::FiniteGroup& g, const la::Field& f, std::span<const la::Elt> x, std::span<const la::Elt> v);

}  // namespace hhb::cohom
