#include "hhb/exactla/subspace.hpp"

#include <algorithm>

#include "hhb/error.hpp"
#include "hhb/exactla/elimination.hpp"

namespace hhb::la {

Subspace::Subspace(FieldPtr field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::span(Mat rows) {
  Subspace s(rows.field_ptr(), rows.cols());
  s.pivots_ = rref_inplace(rows);
  rows.truncate_rows(s.pivots_.size());
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(Mat::from_rows(std::move(field), ambient, vectors));
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  return span(Mat::identity(std::move(field), ambient));
}

Vec Subspace::reduce(std::span<const Elt> v) const {
  if (v.size() != ambient_) throw Error("Subspace::reduce: length mismatch");
  Vec r(v.begin(), v.end());
  const Field& f = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elt c = r[pivots_[i]];
    if (c != 0) f.axpy(std::span<Elt>(r), f.neg(c), basis_.row(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Elt> v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elt e) { return e == 0; });
}

Vec Subspace::coordinates(std::span<const Elt> v) const {
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::combine(std::span<const Elt> coords) const {
  return basis_.apply_left(coords);
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i) {
    if (!contains(o.basis_.row(i))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace mat_nullspace(const Mat& m) {
  Mat work = m;
  const auto pivots = rref_inplace(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const Field& f = m.field();
  std::vector<Vec> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(work(r, free));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.field_ptr(), m.cols(), vecs);
}

Subspace mat_left_nullspace(const Mat& m) { return mat_nullspace(m.transpose()); }

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("subspace operation: ambient dimension mismatch");
  if (!(*a.field_ptr() == *b.field_ptr())) throw Error("subspace operation: field mismatch");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  Mat m(a.field_ptr(), 0, a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i) m.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis().row(i));
  return Subspace::span(std::move(m));
}

// Zassenhaus: reduce the rows (a | a) and (b | 0); rows whose left half
// vanishes carry a basis of the intersection in their right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const std::size_t n = a.ambient();
  Mat m(a.field_ptr(), a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto src = a.basis().row(i);
    std::copy(src.begin(), src.end(), m.row(i).begin());
    std::copy(src.begin(), src.end(), m.row(i).begin() + static_cast<std::ptrdiff_t>(n));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto src = b.basis().row(i);
    std::copy(src.begin(), src.end(), m.row(a.dim() + i).begin());
  }
  const auto pivots = rref_inplace(m);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    auto row = m.row(r);
    vecs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(a.field_ptr(), n, vecs);
}

EchelonBuilder::EchelonBuilder(FieldPtr field, std::size_t ambient)
    : field_(std::move(field)), ambient_(ambient) {}

Vec EchelonBuilder::reduce(std::span<const Elt> v) const {
  if (v.size() != ambient_) throw Error("EchelonBuilder: length mismatch");
  Vec r(v.begin(), v.end());
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elt c = r[pivots_[i]];
    if (c != 0) f.axpy(std::span<Elt>(r), f.neg(c), std::span<const Elt>(rows_[i]));
  }
  return r;
}

bool EchelonBuilder::add(std::span<const Elt> v) {
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Elt e) { return e != 0; });
  if (it == r.end()) return false;
  const auto piv = static_cast<std::size_t>(it - r.begin());
  field_->scale(std::span<Elt>(r), field_->inv(r[piv]));
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

Subspace EchelonBuilder::subspace() const {
  return Subspace::span(field_, ambient_, rows_);
}

}  // namespace hhb::la
