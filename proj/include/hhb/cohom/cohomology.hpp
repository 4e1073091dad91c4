#pragma once

#include <vector>

#include "hhb/cohom/resolution.hpp"

namespace hhb::cohom {

using CohDims = std::vector<std::size_t>;

/// Right cosets H t of a subgroup, represented by their least elements.
struct Cosets {
  std::vector<grp::Elem> reps;
  std::vector<std::uint32_t> coset_of;  // element -> index into reps
};

Cosets right_cosets(const grp::FiniteGroup& g, const grp::Subgroup& h);

/// The coboundary Hom_kH(F_{i-1}, W) -> Hom_kH(F_i, W) for the resolution
/// restricted to H (free on the basis t e_j for t in the cosets), acting on
/// column vectors indexed by ((j, t), w). act holds the H-action on W,
/// indexed by element of G. Requires i >= 1.
Mat restricted_coboundary(const Resolution& res, const grp::Subgroup& h, const Cosets& cosets,
                          const std::vector<Mat>& act, std::size_t dim_w, std::size_t i);

/// Coboundary delta^i of Hom_kG(F, M) = M^{r}, i >= 1.
Mat coboundary(const Resolution& res, const KGModule& m, std::size_t i);

/// dim H^i(G; M) for i <= n; needs res.length() > n.
CohDims cohomology_dims(const KGModule& m, unsigned n, const Resolution& res);

/// Cocycles and coboundaries of Hom_kG(F_i, M).
struct CochainSpaces {
  la::Subspace cocycles;
  la::Subspace coboundaries;
};

CochainSpaces cochain_spaces(const KGModule& m, std::size_t i, const Resolution& res);

/// Span of the coboundaries of G together with the transfers of all
/// H-cocycles of degree i with values in the H-submodule w (all of M when
/// w is null), as a subspace of Hom_kG(F_i, M).
la::Subspace transfer_image(const KGModule& m, const grp::Subgroup& h, std::size_t i, const Resolution& res,
                            const la::Subspace* w = nullptr);

/// dim of tr^G_H(H^i(H; W)) inside H^i(G; M).
std::size_t transfer_image_dim(const KGModule& m, const grp::Subgroup& h, std::size_t i, const Resolution& res,
                               const la::Subspace* w = nullptr);

/// dim HH^i(B) for i <= n, as H^i(G; B) with G acting by conjugation.
CohDims hochschild_dims(const GroupAlgebra& a, std::span<const la::Elt> block_idem, unsigned n, const Resolution& res);

}  // namespace hhb::cohom
