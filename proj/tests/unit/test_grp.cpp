#include <algorithm>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "hhb/error.hpp"
#include "hhb/grp/group.hpp"
#include "hhb/grp/io.hpp"
#include "test_data.hpp"

using namespace hhb::grp;

namespace {

bool is_p_power(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

FiniteGroup s3() { return group_from_permutations(3, {{2, 1, 3}, {2, 3, 1}}); }

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.push_back(c.size());
  return s;
}

}  // namespace

TEST_CASE("group_from_permutations") {
  auto g = s3();
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  auto triv = group_from_permutations(1, {});
  CHECK(triv.order() == 1);
  auto c4 = group_from_permutations(4, {{2, 3, 4, 1}});
  CHECK(c4.order() == 4);
  CHECK(c4.exponent() == 4);
  CHECK_THROWS_AS(group_from_permutations(3, {{1, 1, 2}}), hhb::Error);
  CHECK_THROWS_AS(group_from_permutations(6, {{2, 3, 4, 5, 6, 1}, {2, 1, 3, 4, 5, 6}}, 100), hhb::CapExceeded);
}

TEST_CASE("group_from_table") {
  auto klein = group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(klein.order() == 4);
  CHECK(klein.exponent() == 2);
  CHECK(group_from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {1, 1}}), doctest::Contains("row 1"), hhb::Error);
  CHECK_THROWS_WITH_AS(group_from_table({{1, 0}, {0, 1}}), doctest::Contains("identity"), hhb::Error);
  // A Latin square with identity 0 that is not associative (order 5 loop).
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}}),
                       doctest::Contains("associativity"), hhb::Error);
}

TEST_CASE("group files") {
  auto q8 = load_group(hhb::test::group_file("Q8"));
  CHECK(q8.name() == "Q8");
  CHECK(q8.order() == 8);
  nlohmann::json both = {{"name", "x"}, {"generators", nlohmann::json::array()}, {"table", {{0}}}};
  CHECK_THROWS_AS(group_from_json(both), hhb::Error);
  CHECK(group_from_json({{"name", "C1"}, {"table", {{0}}}}).order() == 1);
  CHECK_THROWS_AS(load_group("/nonexistent/group.json"), hhb::Error);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(s3()) == std::vector<std::size_t>{1, 3, 2});
  auto c4 = group_from_permutations(4, {{2, 3, 4, 1}});
  CHECK(class_sizes(c4) == std::vector<std::size_t>{1, 1, 1, 1});
  auto sizes = class_sizes(load_group(hhb::test::group_file("Q8")));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(conjugacy_classes(s3()).front() == std::vector<Elem>{0});
}

TEST_CASE("centralizer, normalizer, center, sylow") {
  auto g = s3();
  CHECK(centralizer(g, trivial_subgroup()) == whole_group(g));
  CHECK(center(g) == trivial_subgroup());
  auto p3 = sylow(g, 3);
  CHECK(p3.size() == 3);
  CHECK(normalizer(g, p3) == whole_group(g));
  auto p2 = sylow(g, 2);
  CHECK(p2.size() == 2);
  CHECK(normalizer(g, p2) == p2);
  auto c4 = group_from_permutations(4, {{2, 3, 4, 1}});
  CHECK(sylow(c4, 3) == trivial_subgroup());
}

TEST_CASE("p_subgroups and all_subgroups examples") {
  auto g = s3();
  auto p3 = p_subgroups(g, 3);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].rep.size() == 1);
  CHECK(p3[1].rep.size() == 3);
  auto p2 = p_subgroups(g, 2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[1].members.size() == 3);
  auto klein = group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(p_subgroups(klein, 2).size() == 5);
  CHECK(all_subgroups(group_from_permutations(4, {{2, 3, 4, 1}})).size() == 3);
  CHECK(all_subgroups(klein).size() == 5);
  CHECK(all_subgroups(load_group(hhb::test::group_file("C2xC2xC2"))).size() == 16);
  CHECK_THROWS_AS(all_subgroups(g, 4), hhb::CapExceeded);
}

TEST_CASE("subgroup counts of well-known groups") {
  const std::vector<std::pair<const char*, std::size_t>> known = {
      {"S3", 6}, {"D8", 10}, {"Q8", 6}, {"A4", 10}, {"S4", 30}, {"C2xC2xC2xC2", 67}, {"C3xC3", 6},
      {"C3xC3xC3", 28}, {"C12", 6}, {"C9xC3", 10}};
  for (auto [name, count] : known) {
    CAPTURE(name);
    CHECK(all_subgroups(load_group(hhb::test::group_file(name))).size() == count);
  }
}

TEST_CASE("quotients") {
  auto c4 = group_from_permutations(4, {{2, 3, 4, 1}});
  auto z = generated_subgroup(c4, std::vector<Elem>{c4.pow(1, 2)});
  auto q = quotient(c4, z);
  CHECK(q.group.order() == 2);
  auto g = s3();
  auto id = quotient(g, trivial_subgroup());
  CHECK(id.group.order() == 6);
  for (Elem a = 0; a < 6; ++a) CHECK(id.projection[a] == a);
  auto q8 = load_group(hhb::test::group_file("Q8"));
  auto qz = quotient(q8, center(q8));
  CHECK(qz.group.order() == 4);
  CHECK(qz.group.exponent() == 2);
  CHECK_THROWS_AS(quotient(g, sylow(g, 2)), hhb::Error);
}

TEST_CASE("structural properties across the catalog") {
  for (const auto& path : hhb::test::catalog_group_files()) {
    auto g = load_group(path);
    if (g.order() > 24) continue;
    CAPTURE(g.name());
    // Orbit-stabilizer.
    for (const auto& cls : conjugacy_classes(g)) {
      auto c = centralizer(g, generated_subgroup(g, std::vector<Elem>{cls.front()}));
      CHECK(cls.size() * c.size() == g.order());
    }
    auto subs = all_subgroups(g);
    for (const auto& s : subs) CHECK(g.order() % s.size() == 0);
    for (std::uint32_t p : {2u, 3u}) {
      // p-subgroup classes partition the p-subgroups found by full enumeration.
      std::set<std::vector<Elem>> from_classes;
      std::size_t members = 0;
      for (const auto& cls : p_subgroups(g, p)) {
        members += cls.members.size();
        for (const auto& m : cls.members) from_classes.insert(m.elements);
        CHECK(cls.rep == cls.members.front());
      }
      std::set<std::vector<Elem>> from_all;
      for (const auto& s : subs) {
        if (is_p_power(s.size(), p)) {
          from_all.insert(s.elements);
        }
      }
      CHECK(members == from_classes.size());
      CHECK(from_classes == from_all);
      std::size_t sy = 1;
      for (unsigned i = 0; i < p_valuation(g.order(), p); ++i) sy *= p;
      CHECK(sylow(g, p).size() == sy);
    }
    // Quotient by the center is a homomorphic image.
    auto q = quotient(g, center(g));
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        REQUIRE(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
  }
}
