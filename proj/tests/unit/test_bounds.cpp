#include <fstream>

#include "doctest.h"
#include "hhb/bounds/bounds.hpp"
#include "hhb/error.hpp"
#include "test_data.hpp"

using namespace hhb;
using namespace hhb::bounds;

namespace {

Catalog bundled() { return Catalog::scan(test::data_dir()); }

// Number of subspaces of GF(p)^d, the subgroup count of (C_p)^d.
std::size_t subspace_count(std::size_t p, unsigned d) {
  std::size_t total = 0;
  for (unsigned k = 0; k <= d; ++k) {
    // Gaussian binomial [d choose k]_p.
    std::size_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
      std::size_t a = 1, b = 1;
      for (unsigned j = 0; j < d - i; ++j) a *= p;
      for (unsigned j = 0; j < i + 1; ++j) b *= p;
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  return total;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "hhb_test_bounds";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("Brauer-Feit term") {
  CHECK(brauer_feit_term(2, 1) == 2);
  CHECK(brauer_feit_term(3, 1) == 3);
  CHECK(brauer_feit_term(2, 2) == 5);
  CHECK(brauer_feit_term(3, 2) == 21);
  CHECK(brauer_feit_term(2, 3) == 17);
  CHECK_THROWS_AS(brauer_feit_term(2, 0), Error);
  CHECK(!exceeds_64_bits(brauer_feit_term(2, 31)));
  CHECK(exceeds_64_bits(brauer_feit_term(3, 21)));
  CHECK(brauer_feit_term(3, 21) == boost::multiprecision::pow(BigInt(3), 42) / 4 + 1);
}

TEST_CASE("subgroup maxima from the bundled catalogs") {
  const Catalog cat = bundled();
  CHECK(c_max_subgroups(2, 0, cat).value == 1u);
  CHECK(c_max_subgroups(2, 1, cat).value == 2u);
  CHECK(c_max_subgroups(2, 2, cat).value == 5u);
  CHECK(c_max_subgroups(2, 3, cat).value == 16u);
  CHECK(c_max_subgroups(3, 1, cat).value == 2u);
  CHECK(c_max_subgroups(3, 2, cat).value == 6u);
  CHECK(c_max_subgroups(3, 3, cat).value == 28u);
  for (std::uint32_t p : {2u, 3u}) {
    for (unsigned d = 1; d <= 3; ++d) {
      const auto c = c_max_subgroups(p, d, cat);
      CHECK(c.source == kExactCatalog);
      CHECK(*c.value >= subspace_count(p, d));
    }
    const auto missing = c_max_subgroups(p, 4, cat);
    CHECK(!missing.value);
    CHECK(missing.source == kUnavailable);
  }
}

TEST_CASE("manifests must be complete and consistent") {
  const auto groups = test::data_dir() / "groups";
  Catalog cat;
  CatalogManifest partial;
  partial.p = 2;
  partial.d = 2;
  partial.complete = false;
  partial.groups = {groups / "C4.json"};
  cat.add(partial);
  CHECK(!c_max_subgroups(2, 2, cat).value);

  CatalogManifest wrong = partial;
  wrong.complete = true;
  wrong.groups = {groups / "C8.json"};
  cat.add(wrong);
  CHECK_THROWS_AS(c_max_subgroups(2, 2, cat), Error);

  const auto path = write_temp("bad.json", R"({"p": 2, "groups": []})");
  CHECK_THROWS_AS(load_manifest(path), Error);
  const auto good = write_temp("good.json", R"({"p": 2, "d": 1, "complete": true, "groups": ["x.json"]})");
  const auto m = load_manifest(good);
  CHECK(m.complete);
  CHECK(m.groups.front() == good.parent_path() / "x.json");
}

TEST_CASE("f recursion") {
  const Catalog cat = bundled();
  CHECK(f_bound(2, 0, 1, cat) == BigInt(2));
  CHECK(f_bound(2, 1, 1, cat) == BigInt(4));
  CHECK(f_bound(2, 1, 2, cat) == BigInt(60));
  CHECK(f_bound(3, 0, 1, cat) == BigInt(3));
  CHECK(f_bound(2, 0, 0, cat) == BigInt(1));
  CHECK(f_bound(2, 3, 0, cat) == BigInt(0));

  const BoundTable t = make_bound_table(2, 5, 3, cat);
  for (unsigned n = 1; n <= 5; ++n) CHECK(t.at(n, 1) == BigInt(4));
  // f(2, 2) = 2 * 5 * (f(0,1) + f(1,1) + f(2,1)).
  CHECK(t.at(2, 2) == BigInt(2 * 5 * (2 + 4 + 4)));
  // f(1, 3) = 2 * 16 * (f(0,2) + f(1,2)).
  CHECK(t.at(1, 3) == BigInt(2 * 16 * (5 + 60)));
  for (std::uint32_t p : {2u, 3u}) {
    const BoundTable b = make_bound_table(p, 6, 4, cat);
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned d = 1; d <= 3; ++d) {
        REQUIRE(b.at(n, d));
        REQUIRE(b.at(n, d - 1));
        CHECK(*b.at(n, d) >= *b.at(n, d - 1));
      }
      if (n == 0) {
        CHECK(b.at(0, 4) == brauer_feit_term(p, 4));
      } else {
        CHECK(!b.at(n, 4));
      }
    }
    CHECK(b.c[4].source == kUnavailable);
  }
}
