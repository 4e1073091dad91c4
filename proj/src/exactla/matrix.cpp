#include "hhb/exactla/matrix.hpp"

#include <algorithm>
#include <utility>

#include "hhb/error.hpp"
#include "hhb/exactla/elimination.hpp"

namespace hhb::la {

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("Mat::from_rows: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

void Mat::append_row(std::span<const Elt> v) {
  if (v.size() != cols_) throw Error("Mat::append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Mat::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("Mat::operator*: shape mismatch");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elt a = (*this)(i, k);
      if (a != 0) field_->axpy(r.row(i), a, o.row(k));
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Mat::operator+: shape mismatch");
  Mat r = *this;
  field_->axpy(std::span<Elt>(r.data_), 1, std::span<const Elt>(o.data_));
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Mat::operator-: shape mismatch");
  Mat r = *this;
  field_->axpy(std::span<Elt>(r.data_), field_->neg(1), std::span<const Elt>(o.data_));
  return r;
}

Vec Mat::apply(std::span<const Elt> v) const {
  if (v.size() != cols_) throw Error("Mat::apply: length mismatch");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elt acc = 0;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (r[j] != 0 && v[j] != 0) acc = field_->add(acc, field_->mul(r[j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Vec Mat::apply_left(std::span<const Elt> v) const {
  if (v.size() != rows_) throw Error("Mat::apply_left: length mismatch");
  Vec out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] != 0) field_->axpy(std::span<Elt>(out), v[i], row(i));
  }
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elt e) { return e == 0; });
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::size_t mat_rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Mat work = m;
  return rank_inplace(work);
}

std::optional<Vec> mat_solve(const Mat& m, std::span<const Elt> b) {
  if (b.size() != m.rows()) throw Error("mat_solve: length mismatch");
  // Augment [M | b] and reduce; a pivot in the last column means no solution.
  Mat aug(m.field_ptr(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref_inplace(aug);
  Vec x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, m.cols());
  }
  return x;
}

Mat mat_inverse(const Mat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("mat_inverse: matrix is not square");
  if (n == 0) return m;
  Mat aug(m.field_ptr(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_inplace(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("mat_inverse: matrix is singular");
  Mat inv(m.field_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(aug.row(i).begin() + static_cast<std::ptrdiff_t>(n), aug.row(i).end(), inv.row(i).begin());
  }
  return inv;
}

}  // namespace hhb::la
