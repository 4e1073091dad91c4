#pragma once

#include "hhb/cohom/cohomology.hpp"
#include "hhb/galg/algebra.hpp"

namespace hhb::cohom {

struct OracleCaps {
  std::size_t max_group_order = 12;
  /// Largest number of rows allowed in a cochain coboundary matrix.
  std::size_t max_cochain_dim = 20000;
};

/// The algebra B = b kG with unit b, on a basis whose first element is b.
galg::StructAlgebra block_algebra(const GroupAlgebra& a, std::span<const la::Elt> b);

/// dim HH^i(B) for i <= n from the normalized Hochschild cochain complex
/// Hom_k(Bbar^{(x)i}, B), Bbar = B / k 1, which computes
/// Ext over B (x) B^op of (B, B). Throws CapExceeded above the caps.
CohDims hochschild_dims_bimodule_oracle(const GroupAlgebra& a, std::span<const la::Elt> b, unsigned n,
                                        const OracleCaps& caps = {});

/// Same complex for an arbitrary algebra whose basis element 0 is the unit.
CohDims hochschild_dims_bar(const galg::StructAlgebra& b, unsigned n, std::size_t max_cochain_dim);

}  // namespace hhb::cohom
