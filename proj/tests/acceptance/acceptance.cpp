#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "hhb/error.hpp"
#include "hhb/grp/io.hpp"
#include "hhb/harness/report.hpp"

using namespace hhb;

namespace {

const std::filesystem::path kDataDir = HHB_DATA_DIR;

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

galg::GroupPtr load(const std::string& name) {
  return std::make_shared<grp::FiniteGroup>(grp::load_group(kDataDir / "groups" / (name + ".json")));
}

galg::GroupAlgebra algebra(const std::string& name, std::uint32_t p) {
  auto g = load(name);
  return galg::GroupAlgebra(g, la::ff_make(p, blocks::required_field_degree(*g, p)));
}

// The block whose idempotent has augmentation 1.
const blocks::Block& principal(const galg::GroupAlgebra& a, const std::vector<blocks::Block>& bs) {
  for (const auto& b : bs) {
    la::Elt s = 0;
    for (la::Elt x : b.idem.idem) s = a.field().add(s, x);
    if (s == 1) return b;
  }
  throw Error("no principal block");
}

harness::CampaignConfig campaign_config() {
  harness::CampaignConfig cfg;
  cfg.primes = {2, 3};
  cfg.max_order = 16;
  cfg.max_n = 3;
  cfg.catalogs = {kDataDir / "groups"};
  cfg.manifest_dirs = {kDataDir};
  return cfg;
}

// Groups of the bundled catalog up to the given order.
std::vector<harness::CatalogGroup> small_groups(std::size_t max_order) {
  return harness::collect_groups({kDataDir / "groups"}, max_order);
}

void criterion_1(Verdict& v) {
  const bounds::Catalog cat = bounds::Catalog::scan(kDataDir);
  v.require(bounds::brauer_feit_term(2, 1) == 2, "BF(2,1) = 2");
  v.require(bounds::brauer_feit_term(3, 1) == 3, "BF(3,1) = 3");
  v.require(bounds::brauer_feit_term(2, 2) == 5, "BF(2,2) = 5");
  v.require(bounds::f_bound(2, 1, 1, cat) == bounds::BigInt(4), "f(1,1) = 4 at p = 2");
  v.require(bounds::f_bound(2, 1, 2, cat) == bounds::BigInt(60), "f(1,2) = 60 at p = 2");
  for (std::uint32_t p : {2u, 3u}) {
    const auto t = bounds::make_bound_table(p, 5, 3, cat);
    v.require(t.at(0, 0) == bounds::BigInt(1), "f(0,0) = 1");
    for (unsigned n = 1; n <= 5; ++n) v.require(t.at(n, 0) == bounds::BigInt(0), "f(n,0) = 0");
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned d = 1; d <= 3; ++d) {
        v.require(t.at(n, d) && t.at(n, d - 1) && *t.at(n, d) >= *t.at(n, d - 1), "f monotone in d");
      }
    }
  }
}

void criterion_2(Verdict& v) {
  const bounds::Catalog cat = bounds::Catalog::scan(kDataDir);
  const std::vector<std::tuple<std::uint32_t, unsigned, std::size_t>> expect = {
      {2, 1, 2}, {2, 2, 5}, {2, 3, 16}, {3, 1, 2}, {3, 2, 6}};
  for (const auto& [p, d, c] : expect) {
    const auto got = bounds::c_max_subgroups(p, d, cat);
    v.require(got.value == c && got.source == bounds::kExactCatalog,
              "c(" + std::to_string(d) + ") at p = " + std::to_string(p));
  }
}

void criterion_3(Verdict& v) {
  auto a2 = algebra("S3", 2);
  const auto b2 = blocks::analyze_blocks(a2);
  v.require(b2.size() == 2, "kS3 at p = 2 has two blocks");
  if (b2.size() == 2) {
    v.require(b2[0].idem.dim == 2 && b2[0].defect == 1, "block of dim 2 has defect 1");
    v.require(b2[1].idem.dim == 4 && b2[1].defect == 0, "block of dim 4 has defect 0");
    // The 2-dimensional character chi gives e = (chi(1)/6) sum chi(g^-1) g,
    // which is the sum of the two 3-cycles mod 2.
    const auto& g = a2.group();
    la::Vec e(6, 0);
    for (grp::Elem x = 0; x < 6; ++x) {
      if (g.elem_order(x) == 3) e[x] = 1;
    }
    v.require(b2[1].idem.idem == e, "defect-zero idempotent is the 3-cycle class sum");
  }
  auto a3 = algebra("S3", 3);
  const auto b3 = blocks::analyze_blocks(a3);
  v.require(b3.size() == 1, "kS3 at p = 3 has one block");
  if (b3.size() == 1) {
    v.require(b3[0].idem.dim == 6 && b3[0].idem.center_dim == 3 && b3[0].defect == 1, "dim 6, centerDim 3, defect 1");
  }
}

harness::Report g_campaign;

void criterion_4(Verdict& v) {
  g_campaign = harness::run_verify(campaign_config());
  const auto& r = g_campaign;
  v.require(r.issues.empty(), "no job issues");
  std::size_t pass = 0, skipped = 0;
  for (const auto& rec : r.results) {
    for (std::size_t n = 0; n < rec.status.size(); ++n) {
      const auto s = rec.status[n];
      v.require(s != harness::Outcome::fail, rec.group + " block " + std::to_string(rec.block) + " degree " +
                                                  std::to_string(n) + " exceeds f");
      if (rec.defect <= 3) v.require(s == harness::Outcome::pass, "d <= 3 records are never skipped");
      if (n > 0 && rec.defect > 3) v.require(s == harness::Outcome::skipped, "d > 3 records are skipped");
      (s == harness::Outcome::pass ? pass : skipped) += 1;
    }
  }
  // Every prime and every group of order <= 16 appears, and blocks partition kG.
  std::map<std::pair<std::string, std::uint32_t>, std::size_t> dims;
  std::map<std::string, std::size_t> orders;
  for (const auto& rec : r.results) {
    dims[{rec.group, rec.p}] += rec.dim;
    orders[rec.group] = rec.order;
  }
  v.require(orders.size() == small_groups(16).size(), "all groups of order <= 16 covered");
  for (const auto& [key, total] : dims) v.require(total == orders[key.first], "block dims sum to |G|");
  v.note << (v.ok ? "" : "; ") << r.results.size() << " blocks, " << pass << " degree checks pass, " << skipped
         << " skipped (c(4) unavailable)";
}

void criterion_5(Verdict& v) {
  std::size_t n = 0;
  for (const auto& rec : g_campaign.results) {
    v.require(rec.center_ok, rec.group + ": hh[0] = centerDim");
    v.require(rec.brauer_feit_ok, rec.group + ": hh[0] within the Brauer-Feit term");
    ++n;
  }
  v.require(n > 0, "campaign produced blocks");
  v.note << (v.ok ? "" : "; ") << n << " blocks";
}

void criterion_6(Verdict& v) {
  std::size_t compared = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& cg : small_groups(p == 2 ? 8 : 9)) {
      const galg::GroupAlgebra a(cg.group, la::ff_make(p, blocks::required_field_degree(*cg.group, p)));
      const auto res = cohom::build_resolution(cg.group, a.field_ptr(), 2);
      for (const auto& b : galg::block_idempotents(a)) {
        const auto lhs = cohom::hochschild_dims(a, b.idem, 2, res);
        const auto rhs = cohom::hochschild_dims_bimodule_oracle(a, b.idem, 2);
        v.require(lhs == rhs, cg.name + " at p = " + std::to_string(p));
        ++compared;
      }
    }
  }
  v.note << (v.ok ? "" : "; ") << compared << " blocks compared";
}

void criterion_7(Verdict& v) {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{{"S3", 3}, {"S3", 2}, {"C4", 2}}) {
    auto a = algebra(name, p);
    const auto bs = blocks::analyze_blocks(a);
    const auto& b = principal(a, bs);
    const auto res = cohom::build_resolution(a.group_ptr(), a.field_ptr(), 2);
    const auto r = cohom::check_transfer_surjectivity(a, b, 2, res);
    v.require(r.status == cohom::Status::pass && r.rows.size() == 3, name + " at p = " + std::to_string(p));
    v.require(r.witness == true, name + ": Tr(y) = b solvable");
  }
}

void criterion_8(Verdict& v) {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"C4", 2}, {"C2xC2", 2}, {"Q8", 2}, {"D8", 2}, {"C9", 3}, {"C3xC3", 3}}) {
    auto a = algebra(name, p);
    const auto res = cohom::build_resolution(a.group_ptr(), a.field_ptr(), 2);
    for (const auto& b : blocks::analyze_blocks(a)) {
      const auto r = cohom::check_central_quotient_bound(a, b, 2, res);
      v.require(r.status == cohom::Status::pass && r.rows.size() == 3, name + " block " + std::to_string(b.index));
    }
  }
}

void criterion_9(Verdict& v) {
  std::size_t n = 0;
  for (const auto& cg : small_groups(8)) {
    const galg::GroupAlgebra a(cg.group, la::ff_make(2, blocks::required_field_degree(*cg.group, 2)));
    const auto res = cohom::build_resolution(cg.group, a.field_ptr(), 1);
    for (const auto& b : blocks::analyze_blocks(a)) {
      const auto r = cohom::check_brauer_decomposition(a, b, 1, res, 12);
      v.require(r.status == cohom::Status::pass, cg.name + " block " + std::to_string(b.index));
      ++n;
    }
  }
  v.note << (v.ok ? "" : "; ") << n << " blocks";
}

void criterion_10(Verdict& v) {
  auto cfg = campaign_config();
  cfg.degree_factor = 2;
  const auto doubled = harness::run_verify(cfg);
  const auto& base = g_campaign.results;
  v.require(doubled.results.size() == base.size(), "same number of blocks over the doubled field");
  if (doubled.results.size() == base.size()) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto& x = base[i];
      const auto& y = doubled.results[i];
      v.require(y.field_degree == 2 * x.field_degree, "field degree doubled");
      v.require(x.group == y.group && x.p == y.p && x.block == y.block && x.dim == y.dim &&
                    x.center_dim == y.center_dim && x.defect == y.defect && x.hh == y.hh && x.status == y.status,
                x.group + " block " + std::to_string(x.block) + " unchanged");
    }
  }
  const std::string a = harness::report_json(g_campaign).dump(2);
  const std::string b = harness::report_json(harness::run_verify(campaign_config())).dump(2);
  v.require(a == b, "repeated runs give byte-identical reports");
  v.require(harness::report_csv(g_campaign) == harness::report_csv(harness::run_verify(campaign_config())),
            "repeated runs give byte-identical CSV");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"bound function exactness", criterion_1},
      {"c(d) exactness", criterion_2},
      {"block decomposition of kS3", criterion_3},
      {"HH^n(B) <= f(n,d) over the catalog", criterion_4},
      {"HH^0 = Z(B) and Brauer-Feit", criterion_5},
      {"route equivalence with the bimodule oracle", criterion_6},
      {"transfer surjectivity from the defect group", criterion_7},
      {"central quotient inequality", criterion_8},
      {"Brauer pair decomposition", criterion_9},
      {"determinism and field stability", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s (%.2f s)%s%s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, v.note.str().empty() ? "" : "  ", v.note.str().c_str());
    if (!v.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
