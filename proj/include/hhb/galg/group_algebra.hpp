#pragma once

#include <memory>
#include <span>

#include "hhb/exactla/matrix.hpp"
#include "hhb/grp/group.hpp"

namespace hhb::galg {

using la::Elt;
using la::Vec;
using GroupPtr = std::shared_ptr<const grp::FiniteGroup>;

/// kG with elements stored as coefficient vectors indexed by group elements.
class GroupAlgebra {
 public:
  GroupAlgebra(GroupPtr group, la::FieldPtr field);

  const grp::FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const la::Field& field() const { return *field_; }
  const la::FieldPtr& field_ptr() const { return field_; }
  std::size_t dim() const { return group_->order(); }

  Vec zero() const { return Vec(dim(), 0); }
  Vec one() const { return basis(0); }
  Vec basis(grp::Elem g) const;

  Vec mul(std::span<const Elt> x, std::span<const Elt> y) const;
  /// g x g^-1.
  Vec conj(grp::Elem g, std::span<const Elt> x) const;
  /// x is fixed by conjugation with every element of s.
  bool is_fixed_by(const grp::Subgroup& s, std::span<const Elt> x) const;
  bool is_central(std::span<const Elt> x) const;

  /// Matrix whose row g is e_g * x.
  la::Mat right_mult(std::span<const Elt> x) const;
  /// Matrix whose row g is x * e_g.
  la::Mat left_mult(std::span<const Elt> x) const;

 private:
  GroupPtr group_;
  la::FieldPtr field_;
};

}  // namespace hhb::galg
