#pragma once

#include <cstdint>
#include <vector>

#include "hhb/galg/blocks.hpp"

namespace hhb::blocks {

using galg::GroupAlgebra;
using la::Vec;

/// The group algebra of C_G(Q) over the field of A, with index i standing
/// for C.elements[i].
struct CentralizerAlgebra {
  grp::Subgroup centralizer;
  GroupAlgebra algebra;
};

CentralizerAlgebra centralizer_algebra(const GroupAlgebra& a, const grp::Subgroup& q);

/// Br_Q(x): the coefficients of x on C_G(Q), read in kC_G(Q). Throws
/// hhb::Error when x is not fixed by Q-conjugation.
Vec brauer_hom(const GroupAlgebra& a, const grp::Subgroup& q, std::span<const la::Elt> x);

/// Embeds an element of kC (coordinates on c.elements) into kG.
Vec embed(const GroupAlgebra& a, const grp::Subgroup& c, std::span<const la::Elt> x);

struct BrauerPair {
  grp::Subgroup q;
  grp::Subgroup centralizer;
  Vec e;        // block idempotent of kC_G(Q), on centralizer.elements
  Vec e_in_kg;  // the same element inside kG
};

struct Block {
  std::size_t index = 0;
  galg::BlockIdempotent idem;
  grp::Subgroup defect_group;
  unsigned defect = 0;
  std::vector<BrauerPair> pairs;
};

/// Defect group: the largest p-subgroup class with Br_Q(b) != 0. Every other
/// nonvanishing class must be subconjugate to it; otherwise hhb::Error.
grp::Subgroup defect_group(const GroupAlgebra& a, const galg::BlockIdempotent& b,
                           const std::vector<grp::SubgroupClass>& p_classes);

/// B-Brauer pairs (Q, e) up to G-conjugacy: Q runs over the class
/// representatives with Br_Q(b) != 0 and e over the blocks of kC_G(Q) with
/// e Br_Q(b) = e, fused under N_G(Q). Ordered by Q's class, then e.
std::vector<BrauerPair> brauer_pairs(const GroupAlgebra& a, const galg::BlockIdempotent& b,
                                     const std::vector<grp::SubgroupClass>& p_classes);

/// The subspace k C_G(Q) e b of kG. Q-conjugation stability is checked.
la::Subspace brauer_pair_module(const GroupAlgebra& a, const galg::BlockIdempotent& b, const BrauerPair& pair);

/// Max of the splitting degrees of G and of C_G(Q) for every p-subgroup Q.
unsigned required_field_degree(const grp::FiniteGroup& g, std::uint32_t p);

/// Blocks of A with defect groups and Brauer pairs.
std::vector<Block> analyze_blocks(const GroupAlgebra& a);

}  // namespace hhb::blocks
