#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hhb/exactla/matrix.hpp"

namespace hhb::la {

/// A subspace of GF(q)^n stored by its reduced row echelon basis. Two equal
/// subspaces have identical basis matrices.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of GF(q)^ambient.
  Subspace(FieldPtr field, std::size_t ambient);

  /// Row space of the given matrix.
  static Subspace span(Mat rows);
  static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(FieldPtr field, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldPtr& field_ptr() const { return field_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }

  /// Remainder of v after clearing the pivot columns; zero iff v is in the
  /// subspace. The remainder is canonical for the coset v + U.
  Vec reduce(std::span<const Elt> v) const;
  bool contains(std::span<const Elt> v) const;
  /// Coordinates of v in the echelon basis. v must lie in the subspace.
  Vec coordinates(std::span<const Elt> v) const;
  /// Linear combination of the basis rows.
  Vec combine(std::span<const Elt> coords) const;

  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Right nullspace {x : M x = 0} in canonical echelon form.
Subspace mat_nullspace(const Mat& m);

/// Left nullspace {y : y M = 0}.
Subspace mat_left_nullspace(const Mat& m);

/// Throws hhb::Error on ambient or field mismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Incrementally grown echelon basis; cheaper than rebuilding a Subspace
/// for every new vector when spanning sets are built one vector at a time.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldPtr field, std::size_t ambient);

  /// Reduces v against the current rows and keeps it if independent.
  /// Returns true when the dimension grew.
  bool add(std::span<const Elt> v);
  Vec reduce(std::span<const Elt> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  Subspace subspace() const;

 private:
  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;  // each normalized with a 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace hhb::la
