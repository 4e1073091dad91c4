#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hhb/exactla/subspace.hpp"
#include "hhb/galg/group_algebra.hpp"

namespace hhb::galg {

using SparseVec = std::vector<std::pair<std::uint32_t, Elt>>;

/// A finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k c_ijk e_k, stored sparsely.
class StructAlgebra {
 public:
  StructAlgebra() = default;
  StructAlgebra(la::FieldPtr field, std::size_t dim, std::vector<SparseVec> products, Vec one);

  std::size_t dim() const { return dim_; }
  const la::Field& field() const { return *field_; }
  const la::FieldPtr& field_ptr() const { return field_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const Vec& one() const { return one_; }
  Vec basis(std::size_t i) const;

  Vec mul(std::span<const Elt> a, std::span<const Elt> b) const;
  Vec pow(std::span<const Elt> a, std::uint64_t e) const;
  /// Row i is a * e_i.
  la::Mat left_mult(std::span<const Elt> a) const;
  /// Row i is e_i * a.
  la::Mat right_mult(std::span<const Elt> a) const;

  bool is_commutative() const;
  /// All structure constants and the unit lie in the prime field.
  bool constants_in_prime_field() const;

 private:
  la::FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<SparseVec> products_;
  Vec one_;
};

StructAlgebra algebra_from_group(const GroupAlgebra& a);

/// The subalgebra spanned by s, in the coordinates of s's echelon basis.
/// s must contain the unit and be closed under multiplication.
StructAlgebra subalgebra(const StructAlgebra& a, const la::Subspace& s);

/// Coordinates on A/I: the entries of the canonical remainder at the
/// non-pivot positions of I.
class QuotientMap {
 public:
  explicit QuotientMap(la::Subspace ideal);
  std::size_t dim() const { return free_.size(); }
  const la::Subspace& ideal() const { return ideal_; }
  Vec project(std::span<const Elt> v) const;
  /// The preimage supported on the non-pivot positions.
  Vec lift(std::span<const Elt> v) const;

 private:
  la::Subspace ideal_;
  std::vector<std::size_t> free_;
};

/// A/I for a two-sided ideal I, in QuotientMap coordinates.
StructAlgebra quotient_algebra(const StructAlgebra& a, const QuotientMap& q);

/// {x : xy = yx for all y}.
la::Subspace algebra_center(const StructAlgebra& a);

/// The same ring viewed over GF(p): basis element i*m + t stands for
/// w^t e_i where w is the field generator.
StructAlgebra restrict_scalars(const StructAlgebra& a);

/// Jacobson radical by iterated kernels of p-power trace forms.
la::Subspace radical(const StructAlgebra& a);

/// Jacobson radical from the p-power map modulo commutators: with
/// T = {x : x^(p^r) in [A,A]} for p^r >= dim A, J = {a : aA in T}. Slower;
/// kept as an independent check of radical().
la::Subspace radical_by_powers(const StructAlgebra& a);

/// Subspace of the power I^k of an ideal (k >= 1).
la::Subspace ideal_power(const StructAlgebra& a, const la::Subspace& ideal, unsigned k);

}  // namespace hhb::galg
