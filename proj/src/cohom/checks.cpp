#include "hhb/cohom/checks.hpp"

#include <algorithm>

#include "hhb/error.hpp"

namespace hhb::cohom {

namespace {

Status overall(const CheckResult& r) {
  const bool rows_ok = std::all_of(r.rows.begin(), r.rows.end(), [](const CheckRow& x) { return x.ok; });
  return rows_ok && r.witness.value_or(true) ? Status::pass : Status::fail;
}

std::string pair_label(const blocks::BrauerPair& p, std::size_t idx) {
  return "pair " + std::to_string(idx) + " |Q|=" + std::to_string(p.q.size());
}

// Left cosets x P, represented by their least elements.
std::vector<grp::Elem> left_coset_reps(const grp::FiniteGroup& g, const grp::Subgroup& p) {
  std::vector<char> seen(g.order(), 0);
  std::vector<grp::Elem> reps;
  for (grp::Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    for (grp::Elem y : p.elements) seen[g.mul(x, y)] = 1;
    reps.push_back(x);
  }
  return reps;
}

// B_(Q,e) in the coordinates of the conjugation module.
la::Subspace pair_submodule(const GroupAlgebra& a, const blocks::Block& b, const ConjugationModule& cm,
                            const blocks::BrauerPair& pair) {
  const la::Subspace s = blocks::brauer_pair_module(a, b.idem, pair);
  std::vector<Vec> coords;
  for (std::size_t k = 0; k < s.dim(); ++k) coords.push_back(cm.span.coordinates(s.vector(k)));
  return la::Subspace::span(a.field_ptr(), cm.module.dim(), coords);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "skipped";
}

CheckResult check_transfer_surjectivity(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                        const Resolution& res) {
  CheckResult r;
  r.check = "transfer_surjectivity";
  const ConjugationModule cm = conjugation_module(a, b.idem.idem);
  const CohDims dims = cohomology_dims(cm.module, n, res);
  for (unsigned i = 0; i <= n; ++i) {
    const std::size_t img = transfer_image_dim(cm.module, b.defect_group, i, res);
    r.rows.push_back(CheckRow{"defect group", i, img, dims[i], img == dims[i]});
  }
  // Tr^G_P(y) = sum_{x in G/P} x y x^-1 on y in B^P.
  const la::Subspace fixed = cm.module.fixed_points(b.defect_group);
  const auto& g = a.group();
  Mat sum(a.field_ptr(), cm.module.dim(), fixed.dim());
  const Mat ycols = fixed.basis().transpose();
  for (grp::Elem x : left_coset_reps(g, b.defect_group)) sum = sum + cm.module.act(x) * ycols;
  r.witness = la::mat_solve(sum, cm.span.coordinates(b.idem.idem)).has_value();
  r.status = overall(r);
  return r;
}

CheckResult check_brauer_decomposition(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                       const Resolution& res, std::size_t max_order) {
  CheckResult r;
  r.check = "brauer_pair_decomposition";
  if (a.dim() > max_order) {
    r.reason = "skipped (cap): group order " + std::to_string(a.dim()) + " exceeds " + std::to_string(max_order);
    return r;
  }
  const ConjugationModule cm = conjugation_module(a, b.idem.idem);
  const CohDims dims = cohomology_dims(cm.module, n, res);
  std::vector<la::Subspace> subs;
  for (const auto& pair : b.pairs) subs.push_back(pair_submodule(a, b, cm, pair));
  for (unsigned i = 0; i <= n; ++i) {
    const std::size_t bdim = cochain_spaces(cm.module, i, res).coboundaries.dim();
    la::Subspace total(a.field_ptr(), res.ranks[i] * cm.module.dim());
    for (std::size_t k = 0; k < b.pairs.size(); ++k) {
      total = la::subspace_sum(total, transfer_image(cm.module, b.pairs[k].q, i, res, &subs[k]));
    }
    const std::size_t got = total.dim() - std::min(total.dim(), bdim);
    r.rows.push_back(CheckRow{"sum over pairs", i, got, dims[i], got == dims[i]});
  }
  r.status = overall(r);
  return r;
}

CheckResult check_brauer_pair_inequality(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                         const Resolution& res, std::size_t resolution_cap) {
  CheckResult r;
  r.check = "brauer_pair_inequality";
  const ConjugationModule cm = conjugation_module(a, b.idem.idem);
  const auto& g = a.group();
  try {
    for (std::size_t k = 0; k < b.pairs.size(); ++k) {
      const auto& pair = b.pairs[k];
      const la::Subspace w = pair_submodule(a, b, cm, pair);
      // L = Q C_G(Q) as a group of its own, with e inside kL.
      std::vector<grp::Elem> gens = grp::subgroup_generators(g, pair.q);
      for (grp::Elem c : grp::subgroup_generators(g, pair.centralizer)) gens.push_back(c);
      const grp::Subgroup l = grp::generated_subgroup(g, gens);
      auto lg = std::make_shared<grp::FiniteGroup>(grp::subgroup_as_group(g, l));
      const GroupAlgebra la_alg(lg, a.field_ptr());
      Vec el(l.size(), 0);
      for (std::size_t i = 0; i < l.size(); ++i) el[i] = pair.e_in_kg[l.elements[i]];
      const Resolution lres = build_resolution(lg, a.field_ptr(), n, resolution_cap);
      const CohDims rhs = hochschild_dims(la_alg, el, n, lres);
      for (unsigned i = 0; i <= n; ++i) {
        const std::size_t lhs = transfer_image_dim(cm.module, pair.q, i, res, &w);
        r.rows.push_back(CheckRow{pair_label(pair, k), i, lhs, rhs[i], lhs <= rhs[i]});
      }
    }
  } catch (const CapExceeded& e) {
    r.rows.clear();
    r.reason = std::string("skipped (cap): ") + e.what();
    return r;
  }
  r.status = overall(r);
  return r;
}

CheckResult check_central_quotient_bound(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                         const Resolution& res, std::size_t resolution_cap) {
  CheckResult r;
  r.check = "central_quotient_bound";
  const auto& g = a.group();
  const std::uint32_t p = a.field().characteristic();
  const grp::Subgroup z = grp::center(g);
  std::optional<grp::Subgroup> least;
  for (grp::Elem x : z.elements) {
    if (g.elem_order(x) != p) continue;
    grp::Subgroup s = grp::generated_subgroup(g, std::vector<grp::Elem>{x});
    if (!least || s < *least) least = std::move(s);
  }
  if (!least) {
    r.reason = "skipped: the center has no element of order p";
    return r;
  }
  try {
    const grp::Quotient q = grp::quotient(g, *least);
    auto qg = std::make_shared<grp::FiniteGroup>(q.group);
    const GroupAlgebra qa(qg, a.field_ptr());
    Vec bbar = qa.zero();
    for (grp::Elem x = 0; x < g.order(); ++x) {
      bbar[q.projection[x]] = a.field().add(bbar[q.projection[x]], b.idem.idem[x]);
    }
    const Resolution qres = build_resolution(qg, a.field_ptr(), n, resolution_cap);
    const CohDims lower = hochschild_dims(qa, bbar, n, qres);
    const CohDims upper = hochschild_dims(a, b.idem.idem, n, res);
    std::size_t partial = 0;
    for (unsigned i = 0; i <= n; ++i) {
      partial += lower[i];
      r.rows.push_back(CheckRow{"|Z|=" + std::to_string(least->size()), i, upper[i], p * partial, upper[i] <= p * partial});
    }
  } catch (const CapExceeded& e) {
    r.rows.clear();
    r.reason = std::string("skipped (cap): ") + e.what();
    return r;
  }
  r.status = overall(r);
  return r;
}

}  // namespace hhb::cohom
