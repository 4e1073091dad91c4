#include "hhb/galg/group_algebra.hpp"

#include "hhb/error.hpp"

namespace hhb::galg {

GroupAlgebra::GroupAlgebra(GroupPtr group, la::FieldPtr field) : group_(std::move(group)), field_(std::move(field)) {
  if (!group_ || !field_) throw Error("GroupAlgebra: null group or field");
}

Vec GroupAlgebra::basis(grp::Elem g) const {
  Vec v(dim(), 0);
  v[g] = 1;
  return v;
}

Vec GroupAlgebra::mul(std::span<const Elt> x, std::span<const Elt> y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error("GroupAlgebra::mul: length mismatch");
  const la::Field& f = *field_;
  const auto& g = *group_;
  Vec out(dim(), 0);
  for (grp::Elem a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (grp::Elem b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      const grp::Elem c = g.mul(a, b);
      out[c] = f.add(out[c], f.mul(x[a], y[b]));
    }
  }
  return out;
}

Vec GroupAlgebra::conj(grp::Elem g, std::span<const Elt> x) const {
  Vec out(dim(), 0);
  for (grp::Elem a = 0; a < dim(); ++a) out[group_->conj(g, a)] = x[a];
  return out;
}

bool GroupAlgebra::is_fixed_by(const grp::Subgroup& s, std::span<const Elt> x) const {
  for (grp::Elem h : grp::subgroup_generators(*group_, s)) {
    for (grp::Elem a = 0; a < dim(); ++a) {
      if (x[group_->conj(h, a)] != x[a]) return false;
    }
  }
  return true;
}

bool GroupAlgebra::is_central(std::span<const Elt> x) const { return is_fixed_by(grp::whole_group(*group_), x); }

la::Mat GroupAlgebra::right_mult(std::span<const Elt> x) const {
  la::Mat m(field_, dim(), dim());
  for (grp::Elem g = 0; g < dim(); ++g) {
    for (grp::Elem b = 0; b < dim(); ++b) {
      if (x[b] != 0) m(g, group_->mul(g, b)) = x[b];
    }
  }
  return m;
}

la::Mat GroupAlgebra::left_mult(std::span<const Elt> x) const {
  la::Mat m(field_, dim(), dim());
  for (grp::Elem g = 0; g < dim(); ++g) {
    for (grp::Elem a = 0; a < dim(); ++a) {
      if (x[a] != 0) m(g, group_->mul(a, g)) = x[a];
    }
  }
  return m;
}

}  // namespace hhb::galg
