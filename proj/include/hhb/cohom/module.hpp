#pragma once

#include <vector>

#include "hhb/exactla/subspace.hpp"
#include "hhb/galg/group_algebra.hpp"

namespace hhb::cohom {

using galg::GroupAlgebra;
using galg::GroupPtr;
using la::Mat;
using la::Vec;

/// A finite-dimensional left kG-module: g acts on column vectors by act(g).
class KGModule {
 public:
  KGModule(GroupPtr group, la::FieldPtr field, std::size_t dim, std::vector<Mat> action);

  static KGModule trivial(GroupPtr group, la::FieldPtr field, std::size_t dim = 1);
  /// kG acting on itself by left multiplication.
  static KGModule regular(const GroupAlgebra& a);
  static KGModule direct_sum(const KGModule& a, const KGModule& b);

  const grp::FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const la::FieldPtr& field_ptr() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& act(grp::Elem g) const { return action_[g]; }

  /// act(g) act(h) = act(gh) for all pairs and act(1) = 1.
  bool is_homomorphism() const;
  /// Vectors fixed by every element of h.
  la::Subspace fixed_points(const grp::Subgroup& h) const;

 private:
  GroupPtr group_;
  la::FieldPtr field_;
  std::size_t dim_;
  std::vector<Mat> action_;
};

/// G acting by conjugation on the two-sided ideal b kG for a central
/// idempotent b. Coordinates are those of the echelon basis of span.
struct ConjugationModule {
  la::Subspace span;  // b kG inside kG
  KGModule module;
};

ConjugationModule conjugation_module(const GroupAlgebra& a, std::span<const la::Elt> b);

/// The action of the elements of h on an h-stable subspace w of m (w given
/// in m's coordinates), indexed by elements of G; entries outside h are
/// empty. Throws hhb::Error when w is not h-stable.
std::vector<Mat> subspace_action(const KGModule& m, const grp::Subgroup& h, const la::Subspace& w);

}  // namespace hhb::cohom
