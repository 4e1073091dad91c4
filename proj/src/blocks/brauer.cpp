#include "hhb/blocks/brauer.hpp"

#include <algorithm>

#include "hhb/error.hpp"

namespace hhb::blocks {

namespace {

bool nonzero(const Vec& v) {
  return std::any_of(v.begin(), v.end(), [](la::Elt x) { return x != 0; });
}

}  // namespace

CentralizerAlgebra centralizer_algebra(const GroupAlgebra& a, const grp::Subgroup& q) {
  grp::Subgroup c = grp::centralizer(a.group(), q);
  auto cg = std::make_shared<grp::FiniteGroup>(grp::subgroup_as_group(a.group(), c));
  return CentralizerAlgebra{std::move(c), GroupAlgebra(std::move(cg), a.field_ptr())};
}

Vec brauer_hom(const GroupAlgebra& a, const grp::Subgroup& q, std::span<const la::Elt> x) {
  if (!a.is_fixed_by(q, x)) throw Error("brauer_hom: element is not fixed by the subgroup");
  const grp::Subgroup c = grp::centralizer(a.group(), q);
  Vec out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = x[c.elements[i]];
  return out;
}

Vec embed(const GroupAlgebra& a, const grp::Subgroup& c, std::span<const la::Elt> x) {
  Vec out = a.zero();
  for (std::size_t i = 0; i < c.size(); ++i) out[c.elements[i]] = x[i];
  return out;
}

grp::Subgroup defect_group(const GroupAlgebra& a, const galg::BlockIdempotent& b,
                           const std::vector<grp::SubgroupClass>& p_classes) {
  std::vector<const grp::Subgroup*> live;
  for (const auto& cls : p_classes) {
    if (nonzero(brauer_hom(a, cls.rep, b.idem))) live.push_back(&cls.rep);
  }
  if (live.empty()) throw Error("defect_group: Brauer image vanishes at the trivial subgroup");
  const grp::Subgroup* best = live.front();
  for (const auto* q : live) {
    if (q->size() > best->size()) best = q;
  }
  for (const auto* q : live) {
    if (!grp::is_subconjugate(a.group(), *q, *best)) {
      throw Error("defect_group: two non-conjugate maximal p-subgroups with nonzero Brauer image");
    }
  }
  return *best;
}

std::vector<BrauerPair> brauer_pairs(const GroupAlgebra& a, const galg::BlockIdempotent& b,
                                     const std::vector<grp::SubgroupClass>& p_classes) {
  std::vector<BrauerPair> pairs;
  const auto& g = a.group();
  for (const auto& cls : p_classes) {
    const Vec br = brauer_hom(a, cls.rep, b.idem);
    if (!nonzero(br)) continue;
    CentralizerAlgebra ca = centralizer_algebra(a, cls.rep);
    const auto& c = ca.centralizer;
    const grp::Subgroup norm = grp::normalizer(g, cls.rep);
    std::vector<grp::Elem> pos(g.order(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) pos[c.elements[i]] = static_cast<grp::Elem>(i);
    std::vector<Vec> reps;
    for (const auto& blk : galg::block_idempotents(ca.algebra)) {
      if (ca.algebra.mul(blk.idem, br) != blk.idem) continue;
      // Least N_G(Q)-conjugate of e; N_G(Q) normalizes C_G(Q).
      Vec least = blk.idem;
      for (grp::Elem x : norm.elements) {
        Vec conj(c.size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) conj[pos[g.conj(x, c.elements[i])]] = blk.idem[i];
        least = std::min(least, conj);
      }
      if (std::find(reps.begin(), reps.end(), least) == reps.end()) reps.push_back(std::move(least));
    }
    std::sort(reps.begin(), reps.end());
    for (auto& e : reps) {
      BrauerPair pair{cls.rep, c, e, embed(a, c, e)};
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

la::Subspace brauer_pair_module(const GroupAlgebra& a, const galg::BlockIdempotent& b, const BrauerPair& pair) {
  const Vec eb = a.mul(pair.e_in_kg, b.idem);
  la::EchelonBuilder eb_span(a.field_ptr(), a.dim());
  for (grp::Elem c : pair.centralizer.elements) eb_span.add(a.mul(a.basis(c), eb));
  la::Subspace s = eb_span.subspace();
  for (grp::Elem q : grp::subgroup_generators(a.group(), pair.q)) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (!s.contains(a.conj(q, s.vector(i)))) throw Error("brauer_pair_module: subspace is not Q-stable");
    }
  }
  return s;
}

unsigned required_field_degree(const grp::FiniteGroup& g, std::uint32_t p) {
  unsigned m = galg::splitting_degree(g, p);
  for (const auto& cls : grp::p_subgroups(g, p)) {
    const auto c = grp::subgroup_as_group(g, grp::centralizer(g, cls.rep));
    m = std::max(m, galg::splitting_degree(c, p));
  }
  return m;
}

std::vector<Block> analyze_blocks(const GroupAlgebra& a) {
  const auto classes = grp::p_subgroups(a.group(), a.field().characteristic());
  std::vector<Block> out;
  auto idems = galg::block_idempotents(a);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    Block b;
    b.index = i;
    b.idem = std::move(idems[i]);
    b.defect_group = defect_group(a, b.idem, classes);
    b.defect = grp::p_valuation(b.defect_group.size(), a.field().characteristic());
    b.pairs = brauer_pairs(a, b.idem, classes);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace hhb::blocks
