#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hhb/error.hpp"
#include "hhb/grp/io.hpp"
#include "hhb/harness/report.hpp"

namespace {

using namespace hhb;

const std::filesystem::path kDataDir = HHB_DATA_DIR;

// A group file path, or the name of a bundled group.
galg::GroupPtr resolve_group(const std::string& spec) {
  std::filesystem::path path = spec;
  if (!std::filesystem::exists(path)) path = kDataDir / "groups" / (spec + ".json");
  if (!std::filesystem::exists(path)) throw Error("no group file or bundled group named " + spec);
  auto g = std::make_shared<grp::FiniteGroup>(grp::load_group(path));
  if (g->name().empty()) g->set_name(path.stem().string());
  return g;
}

unsigned field_degree(const grp::FiniteGroup& g, std::uint32_t p, unsigned m) {
  return m > 0 ? m : blocks::required_field_degree(g, p);
}

void check_prime(std::uint32_t p) {
  if (!la::is_prime(p)) throw Error("not a prime: " + std::to_string(p));
}

int cmd_blocks(const std::string& spec, std::uint32_t p, unsigned m, unsigned max_n, bool with_hh, bool json) {
  check_prime(p);
  const auto g = resolve_group(spec);
  const unsigned deg = field_degree(*g, p, m);
  const galg::GroupAlgebra a(g, la::ff_make(p, deg));
  const auto blocks = blocks::analyze_blocks(a);
  std::optional<cohom::Resolution> res;
  if (with_hh) res = cohom::build_resolution(g, a.field_ptr(), max_n);
  nlohmann::ordered_json out;
  out["group"] = g->name();
  out["order"] = g->order();
  out["p"] = p;
  out["fieldDegree"] = deg;
  out["blocks"] = nlohmann::ordered_json::array();
  if (!json) std::cout << "group " << g->name() << " order " << g->order() << " p " << p << " field GF(" << p << "^" << deg << ")\n";
  for (const auto& b : blocks) {
    nlohmann::ordered_json jb;
    jb["block"] = b.index;
    jb["dim"] = b.idem.dim;
    jb["centerDim"] = b.idem.center_dim;
    jb["defect"] = b.defect;
    jb["defectGroupOrder"] = b.defect_group.size();
    jb["brauerPairs"] = b.pairs.size();
    if (!json) {
      std::cout << "block " << b.index << ": dim " << b.idem.dim << " centerDim " << b.idem.center_dim << " defect "
                << b.defect << " defectGroupOrder " << b.defect_group.size() << " brauerPairs " << b.pairs.size();
    }
    if (with_hh) {
      const auto hh = cohom::hochschild_dims(a, b.idem.idem, max_n, *res);
      jb["hh"] = hh;
      if (!json) {
        std::cout << " hh";
        for (auto x : hh) std::cout << ' ' << x;
      }
    }
    if (!json) std::cout << '\n';
    out["blocks"].push_back(jb);
  }
  if (json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_bound(std::uint32_t p, unsigned n, unsigned d, const std::filesystem::path& catalog) {
  check_prime(p);
  const auto f = bounds::f_bound(p, n, d, bounds::Catalog::scan(catalog));
  if (!f) {
    std::cout << "unavailable\n";
    return 1;
  }
  std::cout << f->str() << '\n';
  return 0;
}

int cmd_cmax(std::uint32_t p, unsigned d, const std::filesystem::path& catalog) {
  check_prime(p);
  const auto c = bounds::c_max_subgroups(p, d, bounds::Catalog::scan(catalog));
  if (!c.value) {
    std::cout << bounds::kUnavailable << '\n';
    return 1;
  }
  std::cout << *c.value << '\n';
  return 0;
}

int cmd_verify(harness::CampaignConfig cfg, const std::string& out, bool csv) {
  const harness::Report rep = harness::run_verify(cfg);
  const std::string text = csv ? harness::report_csv(rep) : harness::report_json(rep).dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot write " + out);
    f << text;
  }
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : rep.results) {
    for (auto s : r.status) ++counts[static_cast<int>(s)];
  }
  std::cerr << "blocks " << rep.results.size() << ", degree checks: " << counts[0] << " pass, " << counts[1]
            << " fail, " << counts[2] << " skipped; lemma checks " << rep.lemma_checks.size() << "; "
            << (rep.passed() ? "PASS" : "FAIL") << '\n';
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks, Hochschild cohomology and the HH^n(B) <= f(n,d) bound for small group algebras"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");

  std::string group;
  std::uint32_t p = 0;
  unsigned m = 0, max_n = 3, n = 0, d = 0;
  bool json = false, csv = false;
  std::filesystem::path catalog = kDataDir;

  auto* blocks = app.add_subcommand("blocks", "List the blocks of kG");
  blocks->add_option("--group", group, "Group file or bundled group name")->required();
  blocks->add_option("-p", p, "Characteristic")->required();
  blocks->add_option("-m", m, "Field degree (default: splitting degree)");
  blocks->add_flag("--json", json, "JSON output");

  auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of every block");
  hh->add_option("--group", group, "Group file or bundled group name")->required();
  hh->add_option("-p", p, "Characteristic")->required();
  hh->add_option("-m", m, "Field degree (default: splitting degree)");
  hh->add_option("--max-n", max_n, "Highest degree")->required();
  hh->add_flag("--json", json, "JSON output");

  auto* bound = app.add_subcommand("bound", "Evaluate f(n, d)");
  bound->add_option("-p", p, "Prime")->required();
  bound->add_option("-n", n, "Degree")->required();
  bound->add_option("-d", d, "Defect")->required();
  bound->add_option("--catalog", catalog, "Directory with catalog manifests");

  auto* cmax = app.add_subcommand("cmax", "Largest subgroup count of a group of order p^d");
  cmax->add_option("-p", p, "Prime")->required();
  cmax->add_option("-d", d, "Exponent")->required();
  cmax->add_option("--catalog", catalog, "Directory with catalog manifests")->required();

  harness::CampaignConfig cfg;
  std::string out;
  std::vector<std::filesystem::path> manifests = {kDataDir};
  bool double_field = false;
  unsigned forced_degree = 0;
  auto* verify = app.add_subcommand("verify", "Run the verification campaign over a catalog");
  verify->add_option("--catalog", cfg.catalogs, "Group files, directories or manifests")->required();
  verify->add_option("--max-order", cfg.max_order, "Largest group order")->capture_default_str();
  verify->add_option("--max-n", cfg.max_n, "Highest degree")->capture_default_str();
  verify->add_option("--out", out, "Report file (default: stdout)");
  verify->add_option("--primes", cfg.primes, "Primes")->delimiter(',')->capture_default_str();
  verify->add_option("--manifests", manifests, "Directories with catalog manifests for c(d)")->capture_default_str();
  verify->add_option("-m", forced_degree, "Field degree for every group (default: splitting degree)");
  verify->add_flag("--double-field", double_field, "Double the field degree");
  verify->add_flag("--check-lemmas", cfg.check_lemmas, "Run the transfer, Brauer pair and central quotient checks");
  verify->add_flag("--oracle", cfg.check_oracle, "Compare with the bimodule oracle within its caps");
  verify->add_option("--oracle-max-order", cfg.oracle_caps.max_group_order)->capture_default_str();
  verify->add_option("--oracle-max-cochains", cfg.oracle_caps.max_cochain_dim)->capture_default_str();
  verify->add_option("--decomposition-max-order", cfg.decomposition_max_order)->capture_default_str();
  verify->add_option("--resolution-cap", cfg.resolution_cap)->capture_default_str();
  auto* fmt_json = verify->add_flag("--json", json, "JSON report (default)");
  auto* fmt_csv = verify->add_flag("--csv", csv, "CSV report");
  fmt_json->excludes(fmt_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*blocks) return cmd_blocks(group, p, m, 0, false, json);
    if (*hh) return cmd_blocks(group, p, m, max_n, true, json);
    if (*bound) return cmd_bound(p, n, d, catalog);
    if (*cmax) return cmd_cmax(p, d, catalog);
    if (*verify) {
      cfg.manifest_dirs = manifests;
      if (forced_degree > 0) cfg.field_degree = forced_degree;
      if (double_field) cfg.degree_factor = 2;
      return cmd_verify(cfg, out, csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
