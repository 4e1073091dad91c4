#include "hhb/cohom/module.hpp"

#include "hhb/error.hpp"

namespace hhb::cohom {

KGModule::KGModule(GroupPtr group, la::FieldPtr field, std::size_t dim, std::vector<Mat> action)
    : group_(std::move(group)), field_(std::move(field)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != group_->order()) throw Error("KGModule: need one matrix per group element");
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error("KGModule: action matrix has wrong shape");
  }
}

KGModule KGModule::trivial(GroupPtr group, la::FieldPtr field, std::size_t dim) {
  std::vector<Mat> action(group->order(), Mat::identity(field, dim));
  return KGModule(std::move(group), std::move(field), dim, std::move(action));
}

KGModule KGModule::regular(const GroupAlgebra& a) {
  const auto& g = a.group();
  std::vector<Mat> action;
  for (grp::Elem x = 0; x < g.order(); ++x) {
    Mat m(a.field_ptr(), g.order(), g.order());
    for (grp::Elem h = 0; h < g.order(); ++h) m(g.mul(x, h), h) = 1;
    action.push_back(std::move(m));
  }
  return KGModule(a.group_ptr(), a.field_ptr(), g.order(), std::move(action));
}

KGModule KGModule::direct_sum(const KGModule& a, const KGModule& b) {
  const std::size_t d = a.dim() + b.dim();
  std::vector<Mat> action;
  for (grp::Elem g = 0; g < a.group().order(); ++g) {
    Mat m(a.field_ptr(), d, d);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.act(g)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.act(g)(i, j);
    action.push_back(std::move(m));
  }
  return KGModule(a.group_ptr(), a.field_ptr(), d, std::move(action));
}

bool KGModule::is_homomorphism() const {
  if (!(act(0) == Mat::identity(field_, dim_))) return false;
  for (grp::Elem g = 0; g < group_->order(); ++g) {
    for (grp::Elem h = 0; h < group_->order(); ++h) {
      if (!(act(g) * act(h) == act(group_->mul(g, h)))) return false;
    }
  }
  return true;
}

la::Subspace KGModule::fixed_points(const grp::Subgroup& h) const {
  const auto gens = grp::subgroup_generators(*group_, h);
  Mat stacked(field_, 0, dim_);
  const Mat id = Mat::identity(field_, dim_);
  for (grp::Elem g : gens) {
    const Mat d = act(g) - id;
    for (std::size_t r = 0; r < dim_; ++r) stacked.append_row(d.row(r));
  }
  return la::mat_nullspace(stacked);
}

ConjugationModule conjugation_module(const GroupAlgebra& a, std::span<const la::Elt> b) {
  if (!a.is_central(b)) throw Error("conjugation_module: element is not central");
  la::EchelonBuilder eb(a.field_ptr(), a.dim());
  for (grp::Elem g = 0; g < a.dim(); ++g) eb.add(a.mul(b, a.basis(g)));
  la::Subspace span = eb.subspace();
  const std::size_t d = span.dim();
  std::vector<Mat> action;
  for (grp::Elem g = 0; g < a.dim(); ++g) {
    Mat m(a.field_ptr(), d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec c = span.coordinates(a.conj(g, span.vector(k)));
      for (std::size_t r = 0; r < d; ++r) m(r, k) = c[r];
    }
    action.push_back(std::move(m));
  }
  KGModule module(a.group_ptr(), a.field_ptr(), d, std::move(action));
  return ConjugationModule{std::move(span), std::move(module)};
}

std::vector<Mat> subspace_action(const KGModule& m, const grp::Subgroup& h, const la::Subspace& w) {
  std::vector<Mat> out(m.group().order());
  const std::size_t d = w.dim();
  for (grp::Elem x : h.elements) {
    Mat a(m.field_ptr(), d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec img = m.act(x).apply(w.vector(k));
      if (!w.contains(img)) throw Error("subspace_action: subspace is not stable");
      const Vec c = w.coordinates(img);
      for (std::size_t r = 0; r < d; ++r) a(r, k) = c[r];
    }
    out[x] = std::move(a);
  }
  return out;
}

}  // namespace hhb::cohom
