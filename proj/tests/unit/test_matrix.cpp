#include <random>

#include "doctest.h"
#include "hhb/error.hpp"
#include "hhb/exactla/elimination.hpp"
#include "test_util.hpp"

using namespace hhb::la;

TEST_CASE("mat_rank small examples") {
  auto f2 = ff_make(2, 1);
  CHECK(mat_rank(Mat::identity(f2, 3)) == 3);
  Mat ones(f2, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = 1;
  CHECK(mat_rank(ones) == 1);
  CHECK(mat_rank(Mat(f2, 4, 7)) == 0);
  CHECK(mat_rank(Mat(f2, 0, 5)) == 0);
}

TEST_CASE("rank of transpose equals rank") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 5}}) {
    auto f = ff_make(p, m);
    for (int it = 0; it < 20; ++it) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9, k = rng() % (std::min(r, c) + 1);
      Mat a = k == 0 ? Mat(f, r, c) : hhb::test::random_rank_mat(f, r, c, k, rng);
      CHECK(mat_rank(a) == k);
      CHECK(mat_rank(a.transpose()) == k);
    }
  }
}

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 3}, {3, 2}}) {
    auto f = ff_make(p, m);
    for (std::size_t n : {5u, 40u, 200u}) {
      Mat a = hhb::test::random_mat(f, n, n + 17, rng, 0.3);
      Mat s = a, par = a;
      const auto ps = rref_inplace(s, Exec::serial);
      const auto pp = rref_inplace(par, Exec::parallel);
      CHECK(ps == pp);
      CHECK(s == par);
      Mat rs = a, rp = a;
      CHECK(rank_inplace(rs, Exec::serial) == rank_inplace(rp, Exec::parallel));
      CHECK(rank_inplace(rs = a, Exec::serial) == ps.size());
    }
  }
}

TEST_CASE("rref output is reduced echelon") {
  std::mt19937_64 rng(3);
  auto f = ff_make(3, 2);
  Mat a = hhb::test::random_rank_mat(f, 8, 10, 5, rng);
  const auto piv = rref_inplace(a);
  REQUIRE(piv.size() == 5);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    for (std::size_t c = 0; c < piv[r]; ++c) CHECK(a(r, c) == 0);
    for (std::size_t r2 = 0; r2 < a.rows(); ++r2) CHECK(a(r2, piv[r]) == (r2 == r ? 1u : 0u));
    if (r > 0) CHECK(piv[r] > piv[r - 1]);
  }
  for (std::size_t r = piv.size(); r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a(r, c) == 0);
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(9);
  auto f = ff_make(5, 1);
  Mat a = hhb::test::random_rank_mat(f, 6, 6, 6, rng);
  Mat inv = mat_inverse(a);
  CHECK(a * inv == Mat::identity(f, 6));
  Vec x = {1, 2, 3, 4, 0, 1};
  Vec b = a.apply(x);
  auto sol = mat_solve(a, b);
  REQUIRE(sol.has_value());
  CHECK(*sol == x);
  Mat sing = hhb::test::random_rank_mat(f, 4, 4, 3, rng);
  CHECK_THROWS_AS(mat_inverse(sing), hhb::Error);
  CHECK(mat_inverse(Mat(f, 0, 0)).rows() == 0);
  // An inconsistent system: the zero matrix with a nonzero right-hand side.
  CHECK_FALSE(mat_solve(Mat(f, 2, 2), Vec{1, 0}).has_value());
}

TEST_CASE("shape checks") {
  auto f = ff_make(2, 1);
  CHECK_THROWS_AS(Mat(f, 2, 3) * Mat(f, 2, 3), hhb::Error);
  CHECK_THROWS_AS(Mat(f, 2, 3) + Mat(f, 3, 2), hhb::Error);
  CHECK_THROWS_AS(Mat(f, 2, 3).apply(Vec{1, 0}), hhb::Error);
}
