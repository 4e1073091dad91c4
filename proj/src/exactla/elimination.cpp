#include "hhb/exactla/elimination.hpp"

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hhb::la {

namespace {

std::atomic<Exec> g_default_exec{Exec::parallel};

// Below this many entries per elimination step the thread fan-out costs more
// than it saves.
constexpr std::size_t kParallelThreshold = 1 << 14;

// Finds the topmost row >= from with a nonzero entry in column c.
std::ptrdiff_t find_pivot(const Mat& m, std::size_t from, std::size_t c) {
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, c) != 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void normalize_row(Mat& m, std::size_t r, std::size_t c) {
  const Field& f = m.field();
  const Elt inv = f.inv(m(r, c));
  auto row = m.row(r).subspan(c);
  f.scale(row, inv);
}

// Clears column c in every row of [lo, hi) except the pivot row r.
void clear_column_serial(Mat& m, std::size_t r, std::size_t c, std::size_t lo, std::size_t hi) {
  const Field& f = m.field();
  auto pivot = m.row(r).subspan(c);
  for (std::size_t i = lo; i < hi; ++i) {
    if (i == r) continue;
    const Elt v = m(i, c);
    if (v == 0) continue;
    f.axpy(m.row(i).subspan(c), f.neg(v), pivot);
  }
}

void clear_column_parallel(Mat& m, std::size_t r, std::size_t c, std::size_t lo, std::size_t hi) {
  const std::size_t work = (hi - lo) * (m.cols() - c);
  if (work < kParallelThreshold) {
    clear_column_serial(m, r, c, lo, hi);
    return;
  }
  const Field& f = m.field();
  auto pivot = m.row(r).subspan(c);
  const auto n = static_cast<std::int64_t>(hi);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = static_cast<std::int64_t>(lo); i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (ui == r) continue;
    const Elt v = m(ui, c);
    if (v == 0) continue;
    f.axpy(m.row(ui).subspan(c), f.neg(v), pivot);
  }
}

template <bool Reduced, bool Parallel>
std::vector<std::size_t> eliminate(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const auto pr = find_pivot(m, r, c);
    if (pr < 0) continue;
    m.swap_rows(r, static_cast<std::size_t>(pr));
    normalize_row(m, r, c);
    const std::size_t lo = Reduced ? 0 : r + 1;
    if constexpr (Parallel) {
      clear_column_parallel(m, r, c, lo, m.rows());
    } else {
      clear_column_serial(m, r, c, lo, m.rows());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec e) { g_default_exec.store(e); }

std::vector<std::size_t> rref_inplace(Mat& m, Exec exec) {
  return exec == Exec::parallel ? eliminate<true, true>(m) : eliminate<true, false>(m);
}

std::vector<std::size_t> rref_inplace(Mat& m) { return rref_inplace(m, default_exec()); }

std::size_t rank_inplace(Mat& m, Exec exec) {
  return exec == Exec::parallel ? eliminate<false, true>(m).size() : eliminate<false, false>(m).size();
}

std::size_t rank_inplace(Mat& m) { return rank_inplace(m, default_exec()); }

}  // namespace hhb::la
