#include <fstream>

#include "doctest.h"
#include "hhb/error.hpp"
#include "hhb/harness/report.hpp"
#include "test_data.hpp"

using namespace hhb;
using namespace hhb::harness;

namespace {

CampaignConfig config_for(const std::string& name, std::vector<std::uint32_t> primes, unsigned max_n) {
  CampaignConfig cfg;
  cfg.primes = std::move(primes);
  cfg.max_n = max_n;
  cfg.catalogs = {test::group_file(name)};
  cfg.manifest_dirs = {test::data_dir()};
  return cfg;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "hhb_test_harness";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("S3 at p = 3") {
  const Report r = run_verify(config_for("S3", {3}, 2));
  REQUIRE(r.results.size() == 1);
  const auto& b = r.results[0];
  CHECK(b.defect == 1);
  CHECK(b.hh[0] == 3);
  CHECK(b.f[0] == bounds::BigInt(3));
  CHECK(b.status == std::vector<Outcome>{Outcome::pass, Outcome::pass, Outcome::pass});
  CHECK(r.passed());
}

TEST_CASE("S3 at p = 2") {
  const Report r = run_verify(config_for("S3", {2}, 2));
  REQUIRE(r.results.size() == 2);
  CHECK(r.results[0].defect == 1);
  CHECK(r.results[1].defect == 0);
  CHECK(r.results[1].hh == std::vector<std::size_t>{1, 0, 0});
  for (const auto& b : r.results) {
    CHECK(std::all_of(b.status.begin(), b.status.end(), [](Outcome o) { return o == Outcome::pass; }));
  }
}

TEST_CASE("C2 at p = 2 follows the recursion") {
  const Report r = run_verify(config_for("C2", {2}, 3));
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].hh == std::vector<std::size_t>{2, 2, 2, 2});
  std::vector<std::optional<bounds::BigInt>> f = {2, 4, 4, 4};
  CHECK(r.results[0].f == f);
  CHECK(r.passed());
}

TEST_CASE("records are consistent and ordered") {
  CampaignConfig cfg;
  cfg.max_order = 12;
  cfg.max_n = 2;
  cfg.catalogs = {test::data_dir() / "groups"};
  cfg.manifest_dirs = {test::data_dir()};
  cfg.check_lemmas = true;
  cfg.check_oracle = true;
  const Report r = run_verify(cfg);
  CHECK(r.passed());
  CHECK(r.issues.empty());
  std::map<std::pair<std::string, std::uint32_t>, std::size_t> dims;
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& x = r.results[i];
    dims[{x.group, x.p}] += x.dim;
    CHECK(x.hh[0] == x.center_dim);
    for (std::size_t n = 0; n < x.status.size(); ++n) {
      CHECK((x.status[n] == Outcome::skipped) == !x.f[n].has_value());
      CHECK((x.status[n] == Outcome::skipped) == !x.reasons[n].empty());
    }
    if (i > 0) {
      const auto& y = r.results[i - 1];
      CHECK(std::tie(y.group, y.p, y.block) < std::tie(x.group, x.p, x.block));
    }
  }
  for (const auto& [key, total] : dims) {
    for (const auto& x : r.results) {
      if (x.group == key.first) {
        CHECK(total == x.order);
        break;
      }
    }
  }
  for (const auto& l : r.lemma_checks) {
    CHECK(l.result.status != cohom::Status::fail);
    if (l.result.status == cohom::Status::skipped) CHECK(!l.result.reason.empty());
  }
}

TEST_CASE("reports are deterministic and serialize") {
  CampaignConfig cfg = config_for("D8", {2, 3}, 2);
  cfg.check_lemmas = true;
  const auto a = report_json(run_verify(cfg));
  const auto b = report_json(run_verify(cfg));
  CHECK(a.dump() == b.dump());
  CHECK(a["results"].size() == 6);
  CHECK(a["results"][0]["group"] == "D8");
  CHECK(a["lemmaChecks"].size() == 4 * a["results"].size());
  CHECK(a["passed"] == true);
  const std::string csv = report_csv(run_verify(cfg));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6 * 3);
  CHECK(csv.rfind("group,order,p,", 0) == 0);
}

TEST_CASE("doubling the field degree changes no dimension") {
  CampaignConfig cfg = config_for("A4", {2, 3}, 2);
  const Report x = run_verify(cfg);
  cfg.degree_factor = 2;
  const Report y = run_verify(cfg);
  REQUIRE(x.results.size() == y.results.size());
  for (std::size_t i = 0; i < x.results.size(); ++i) {
    CHECK(y.results[i].field_degree == 2 * x.results[i].field_degree);
    CHECK(x.results[i].hh == y.results[i].hh);
    CHECK(x.results[i].defect == y.results[i].defect);
  }
}

TEST_CASE("catalog errors name the file") {
  const auto dir = temp_dir();
  std::ofstream(dir / "broken.json") << R"({"name": "X", "generators": [[1, 1]]})";
  try {
    collect_groups({dir}, 16);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
  std::ofstream(dir / "broken.json") << "not json";
  CHECK_THROWS_AS(collect_groups({dir}, 16), Error);
}

TEST_CASE("groups above the order cap are left out") {
  const auto groups = collect_groups({test::data_dir() / "groups"}, 6);
  for (const auto& g : groups) CHECK(g.group->order() <= 6);
  CHECK(groups.size() == 8);  // C1 C2 C3 C4 C2xC2 C5 C6 S3
  const auto via_manifest = collect_groups({test::data_dir() / "p2" / "order8.json"}, 16);
  CHECK(via_manifest.size() == 5);
}

TEST_CASE("unavailable c(d) skips instead of failing") {
  CampaignConfig cfg = config_for("C2xC2xC2xC2", {2}, 2);
  const Report r = run_verify(cfg);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].defect == 4);
  CHECK(r.results[0].status[0] == Outcome::pass);
  CHECK(r.results[0].status[1] == Outcome::skipped);
  CHECK(r.results[0].reasons[1].find("unavailable") != std::string::npos);
  CHECK(r.passed());
}
