#pragma once

#include <random>

#include "hhb/exactla/matrix.hpp"

namespace hhb::test {

inline la::Mat random_mat(const la::FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                          double density = 1.0) {
  la::Mat m(f, rows, cols);
  std::uniform_int_distribution<std::uint64_t> elt(0, f->order() - 1);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) m(i, j) = static_cast<la::Elt>(elt(rng));
    }
  }
  return m;
}

// Random matrix of prescribed rank r: product of random rows x r and r x cols
// factors, retried until the rank is exact.
inline la::Mat random_rank_mat(const la::FieldPtr& f, std::size_t rows, std::size_t cols, std::size_t r,
                               std::mt19937_64& rng) {
  for (;;) {
    la::Mat m = random_mat(f, rows, r, rng) * random_mat(f, r, cols, rng);
    if (la::mat_rank(m) == r) return m;
  }
}

}  // namespace hhb::test
