#include <algorithm>
#include <random>

#include "doctest.h"
#include "hhb/blocks/brauer.hpp"
#include "hhb/error.hpp"
#include "hhb/grp/io.hpp"
#include "test_data.hpp"

using namespace hhb;
using namespace hhb::blocks;

namespace {

galg::GroupPtr load(const std::string& name) {
  return std::make_shared<grp::FiniteGroup>(grp::load_group(test::group_file(name)));
}

GroupAlgebra algebra(const galg::GroupPtr& g, std::uint32_t p) {
  return GroupAlgebra(g, la::ff_make(p, required_field_degree(*g, p)));
}

bool nonzero(const Vec& v) {
  return std::any_of(v.begin(), v.end(), [](la::Elt x) { return x != 0; });
}

// Random element fixed by Q-conjugation: a combination of Q-orbit sums.
Vec random_fixed(const GroupAlgebra& a, const grp::Subgroup& q, std::mt19937_64& rng) {
  Vec x = a.zero();
  std::vector<char> seen(a.dim(), 0);
  for (grp::Elem g = 0; g < a.dim(); ++g) {
    if (seen[g]) continue;
    const auto c = static_cast<la::Elt>(rng() % a.field().order());
    for (grp::Elem h : q.elements) {
      const grp::Elem y = a.group().conj(h, g);
      if (!seen[y]) {
        seen[y] = 1;
        x[y] = c;
      }
    }
  }
  return x;
}

}  // namespace

TEST_CASE("brauer_hom examples") {
  auto g = load("S3");
  auto a = algebra(g, 3);
  Vec x = a.basis(1);
  x[2] = 2;
  CHECK(brauer_hom(a, grp::trivial_subgroup(), x) == x);
  auto p3 = grp::sylow(*g, 3);
  auto one = brauer_hom(a, p3, a.one());
  REQUIRE(one.size() == 3);
  CHECK(one == Vec{1, 0, 0});
  auto blocks = galg::block_idempotents(a);
  REQUIRE(blocks.size() == 1);
  CHECK(nonzero(brauer_hom(a, p3, blocks[0].idem)));
  // A transposition is not fixed by the 3-cycles.
  grp::Elem t = 1;
  while (g->elem_order(t) != 2) ++t;
  CHECK_THROWS_AS(brauer_hom(a, p3, a.basis(t)), Error);
}

TEST_CASE("brauer_hom is multiplicative on fixed elements") {
  std::mt19937_64 rng(17);
  for (const char* name : {"S3", "D8", "A4", "Q8", "C3xS3"}) {
    auto g = load(name);
    for (std::uint32_t p : {2u, 3u}) {
      auto a = algebra(g, p);
      for (const auto& cls : grp::p_subgroups(*g, p)) {
        auto ca = centralizer_algebra(a, cls.rep);
        for (int it = 0; it < 3; ++it) {
          Vec x = random_fixed(a, cls.rep, rng), y = random_fixed(a, cls.rep, rng);
          CHECK(brauer_hom(a, cls.rep, a.mul(x, y)) ==
                ca.algebra.mul(brauer_hom(a, cls.rep, x), brauer_hom(a, cls.rep, y)));
        }
      }
    }
  }
}

TEST_CASE("defect groups") {
  auto s3 = load("S3");
  auto b2 = analyze_blocks(algebra(s3, 2));
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].defect == 1);
  CHECK(b2[1].idem.dim == 4);
  CHECK(b2[1].defect == 0);
  auto b3 = analyze_blocks(algebra(s3, 3));
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].defect == 1);
  CHECK(b3[0].defect_group.size() == 3);
  auto q8 = load("Q8");
  auto bq = analyze_blocks(algebra(q8, 2));
  REQUIRE(bq.size() == 1);
  CHECK(bq[0].defect_group.size() == 8);
  CHECK(bq[0].defect == 3);
}

TEST_CASE("brauer pair examples") {
  auto s3 = load("S3");
  auto a = algebra(s3, 3);
  auto blocks = analyze_blocks(a);
  const auto& pairs = blocks[0].pairs;
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].q.size() == 1);
  CHECK(pairs[0].e_in_kg == blocks[0].idem.idem);
  CHECK(pairs[1].q.size() == 3);
  CHECK(pairs[1].e == Vec{1, 0, 0});
  // Trivial pair: the module is B itself.
  CHECK(brauer_pair_module(a, blocks[0].idem, pairs[0]).dim() == blocks[0].idem.dim);
  // k C3 e b with e = 1 and b = 1 is kC3.
  CHECK(brauer_pair_module(a, blocks[0].idem, pairs[1]).dim() == 3);
}

TEST_CASE("block invariants across the catalog") {
  for (const auto& path : test::catalog_group_files()) {
    auto g = std::make_shared<grp::FiniteGroup>(grp::load_group(path));
    if (g->order() > 24) continue;
    for (std::uint32_t p : {2u, 3u}) {
      CAPTURE(g->name());
      CAPTURE(p);
      auto a = algebra(g, p);
      const auto classes = grp::p_subgroups(*g, p);
      const auto sy = grp::sylow(*g, p);
      const unsigned nu = grp::p_valuation(g->order(), p);
      auto blocks = analyze_blocks(a);
      std::size_t principal = 0;
      for (const auto& b : blocks) {
        CHECK(b.defect <= nu);
        CHECK(b.defect_group.size() == [&] {
          std::size_t s = 1;
          for (unsigned i = 0; i < b.defect; ++i) s *= p;
          return s;
        }());
        // The principal block acts as 1 on the trivial module.
        la::Elt aug = 0;
        for (auto c : b.idem.idem) aug = a.field().add(aug, c);
        if (aug != 0) {
          ++principal;
          CHECK(b.defect == nu);
          CHECK(nonzero(brauer_hom(a, sy, b.idem.idem)));
        }
        if (nonzero(brauer_hom(a, sy, b.idem.idem))) CHECK(b.defect == nu);
        REQUIRE(!b.pairs.empty());
        CHECK(b.pairs.front().q.size() == 1);
        CHECK(b.pairs.front().e_in_kg == b.idem.idem);
        std::size_t max_q = 0;
        for (const auto& pr : b.pairs) {
          auto ca = centralizer_algebra(a, pr.q);
          CHECK(ca.algebra.mul(pr.e, brauer_hom(a, pr.q, b.idem.idem)) == pr.e);
          CHECK(ca.algebra.mul(pr.e, pr.e) == pr.e);
          CHECK(ca.algebra.is_central(pr.e));
          max_q = std::max(max_q, pr.q.size());
        }
        // Maximal pairs sit at the defect group.
        for (const auto& pr : b.pairs) {
          if (pr.q.size() == max_q) CHECK(grp::is_subconjugate(*g, pr.q, b.defect_group));
        }
        CHECK(max_q == b.defect_group.size());
        if (g->is_abelian() && g->order() <= 12) {
          for (const auto& pr : b.pairs) {
            auto s = brauer_pair_module(a, b.idem, pr);
            for (std::size_t i = 0; i < s.dim(); ++i)
              for (grp::Elem q : pr.q.elements) CHECK(a.conj(q, s.vector(i)) == s.vector(i));
          }
        }
      }
      CHECK(principal == 1);
      // Brauer images of all blocks sum to 1 in kC_G(Q).
      for (const auto& cls : classes) {
        auto ca = centralizer_algebra(a, cls.rep);
        Vec total = ca.algebra.zero();
        for (const auto& b : blocks) {
          a.field().axpy(std::span<la::Elt>(total), 1, std::span<const la::Elt>(brauer_hom(a, cls.rep, b.idem.idem)));
        }
        CHECK(total == ca.algebra.one());
      }
    }
  }
}

TEST_CASE("p-groups have one block with the whole group as defect group") {
  for (const char* name : {"C2", "C4", "D8", "Q8", "C2xC2xC2"}) {
    auto blocks = analyze_blocks(algebra(load(name), 2));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].defect_group.size() == blocks[0].idem.dim);
  }
}
