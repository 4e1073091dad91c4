#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hhb/exactla/field.hpp"

namespace hhb::la {

using Vec = std::vector<Elt>;

/// Dense row-major matrix over a finite field.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(FieldPtr field, std::size_t n);
  /// Matrix whose rows are the given vectors (all of length cols).
  static Mat from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Elt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Elt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Elt> v);
  /// Keeps the first n rows.
  void truncate_rows(std::size_t n);
  void swap_rows(std::size_t a, std::size_t b);

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  /// Matrix-vector product M v.
  Vec apply(std::span<const Elt> v) const;
  /// Row-vector product v M.
  Vec apply_left(std::span<const Elt> v) const;

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  const std::vector<Elt>& data() const { return data_; }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> data_;
};

/// Rank over the declared field.
std::size_t mat_rank(const Mat& m);

/// Solves M x = b. Returns nullopt when inconsistent.
std::optional<Vec> mat_solve(const Mat& m, std::span<const Elt> b);

/// Inverse of a square matrix; throws hhb::Error when singular.
Mat mat_inverse(const Mat& m);

}  // namespace hhb::la
