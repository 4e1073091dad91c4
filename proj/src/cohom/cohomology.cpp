#include "hhb/cohom/cohomology.hpp"

#include "hhb/error.hpp"
#include "hhb/exactla/elimination.hpp"

namespace hhb::cohom {

namespace {

// dst[r0.., c0..] += c * src.
void add_block(Mat& dst, std::size_t r0, std::size_t c0, la::Elt c, const Mat& src) {
  const la::Field& f = dst.field();
  for (std::size_t r = 0; r < src.rows(); ++r) {
    auto out = dst.row(r0 + r).subspan(c0, src.cols());
    f.axpy(out, c, src.row(r));
  }
}

Cosets whole_group_cosets(const grp::FiniteGroup& g) {
  return Cosets{{0}, std::vector<std::uint32_t>(g.order(), 0)};
}

// Row space of the transpose, i.e. the column space.
la::Subspace column_space(const Mat& m) { return la::Subspace::span(m.transpose()); }

}  // namespace

Cosets right_cosets(const grp::FiniteGroup& g, const grp::Subgroup& h) {
  Cosets c;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  c.coset_of.assign(g.order(), kUnset);
  for (grp::Elem x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] != kUnset) continue;
    const auto k = static_cast<std::uint32_t>(c.reps.size());
    for (grp::Elem y : h.elements) c.coset_of[g.mul(y, x)] = k;
    c.reps.push_back(x);
  }
  return c;
}

Mat restricted_coboundary(const Resolution& res, const grp::Subgroup& h, const Cosets& cosets,
                          const std::vector<Mat>& act, std::size_t dim_w, std::size_t i) {
  if (i == 0 || i > res.length()) throw Error("restricted_coboundary: degree out of range");
  const auto& g = *res.group;
  const std::size_t n = g.order();
  const std::size_t nt = cosets.reps.size();
  const std::size_t ri = res.ranks[i];
  const std::size_t rp = res.ranks[i - 1];
  Mat delta(res.field, ri * nt * dim_w, rp * nt * dim_w);
  for (std::size_t j = 0; j < ri; ++j) {
    const Vec& w = res.generators[i][j];
    for (std::size_t t = 0; t < nt; ++t) {
      const grp::Elem tr = cosets.reps[t];
      for (std::size_t l = 0; l < rp; ++l) {
        for (grp::Elem x = 0; x < n; ++x) {
          const la::Elt c = w[l * n + x];
          if (c == 0) continue;
          // t x = h' t' with h' in H.
          const grp::Elem tx = g.mul(tr, x);
          const std::uint32_t t2 = cosets.coset_of[tx];
          const grp::Elem hh = g.mul(tx, g.inv(cosets.reps[t2]));
          if (!h.contains(hh)) throw Error("restricted_coboundary: inconsistent cosets");
          add_block(delta, (j * nt + t) * dim_w, (l * nt + t2) * dim_w, c, act[hh]);
        }
      }
    }
  }
  return delta;
}

Mat coboundary(const Resolution& res, const KGModule& m, std::size_t i) {
  std::vector<Mat> act;
  for (grp::Elem x = 0; x < m.group().order(); ++x) act.push_back(m.act(x));
  return restricted_coboundary(res, grp::whole_group(m.group()), whole_group_cosets(m.group()), act, m.dim(), i);
}

CohDims cohomology_dims(const KGModule& m, unsigned n, const Resolution& res) {
  if (res.length() <= n) throw Error("cohomology_dims: resolution too short");
  CohDims dims;
  std::size_t rank_prev = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const std::size_t rank_next = la::mat_rank(coboundary(res, m, i + 1));
    dims.push_back(res.ranks[i] * m.dim() - rank_next - rank_prev);
    rank_prev = rank_next;
  }
  return dims;
}

CochainSpaces cochain_spaces(const KGModule& m, std::size_t i, const Resolution& res) {
  if (res.length() <= i) throw Error("cochain_spaces: resolution too short");
  la::Subspace z = la::mat_nullspace(coboundary(res, m, i + 1));
  la::Subspace b = i == 0 ? la::Subspace(m.field_ptr(), res.ranks[0] * m.dim()) : column_space(coboundary(res, m, i));
  return CochainSpaces{std::move(z), std::move(b)};
}

la::Subspace transfer_image(const KGModule& m, const grp::Subgroup& h, std::size_t i, const Resolution& res,
                            const la::Subspace* w) {
  const auto& g = m.group();
  const la::Subspace full = la::Subspace::full(m.field_ptr(), m.dim());
  const la::Subspace& ws = w ? *w : full;
  const std::size_t dw = ws.dim();
  const auto act = subspace_action(m, h, ws);
  const Cosets cosets = right_cosets(g, h);
  const std::size_t nt = cosets.reps.size();
  const la::Subspace zh = la::mat_nullspace(restricted_coboundary(res, h, cosets, act, dw, i + 1));

  // tr(psi)(e_j) = sum_t t^-1 psi(t e_j), with W embedded in M.
  const std::size_t ri = res.ranks[i];
  Mat wcols = ws.basis().transpose();
  Mat tr(m.field_ptr(), ri * m.dim(), ri * nt * dw);
  for (std::size_t t = 0; t < nt; ++t) {
    const Mat block = m.act(g.inv(cosets.reps[t])) * wcols;
    for (std::size_t j = 0; j < ri; ++j) add_block(tr, j * m.dim(), (j * nt + t) * dw, 1, block);
  }
  la::EchelonBuilder eb(m.field_ptr(), ri * m.dim());
  const CochainSpaces g_spaces = cochain_spaces(m, i, res);
  for (std::size_t k = 0; k < g_spaces.coboundaries.dim(); ++k) eb.add(g_spaces.coboundaries.vector(k));
  for (std::size_t k = 0; k < zh.dim(); ++k) {
    const Vec img = tr.apply(zh.vector(k));
    if (!g_spaces.cocycles.contains(img)) throw Error("transfer_image: transfer of a cocycle is not a cocycle");
    eb.add(img);
  }
  return eb.subspace();
}

std::size_t transfer_image_dim(const KGModule& m, const grp::Subgroup& h, std::size_t i, const Resolution& res,
                               const la::Subspace* w) {
  const std::size_t b = cochain_spaces(m, i, res).coboundaries.dim();
  return transfer_image(m, h, i, res, w).dim() - b;
}

CohDims hochschild_dims(const GroupAlgebra& a, std::span<const la::Elt> block_idem, unsigned n, const Resolution& res) {
  return cohomology_dims(conjugation_module(a, block_idem).module, n, res);
}

}  // namespace hhb::cohom
