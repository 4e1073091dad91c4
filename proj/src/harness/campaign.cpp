#include "hhb/harness/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "hhb/error.hpp"
#include "hhb/grp/io.hpp"

namespace hhb::harness {

namespace {

bool is_manifest(const nlohmann::json& j) {
  return j.is_object() && j.contains("p") && j.contains("d") && j.contains("groups");
}

void add_group_files(const std::filesystem::path& path, std::set<std::filesystem::path>& files) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(path.string() + ": not valid JSON");
  if (is_manifest(j)) {
    for (const auto& g : bounds::load_manifest(path).groups) files.insert(std::filesystem::weakly_canonical(g));
  } else {
    files.insert(std::filesystem::weakly_canonical(path));
  }
}

std::size_t valuation_bound(std::size_t order, std::uint32_t p) {
  unsigned d = 0;
  for (std::size_t q = p; q <= order; q *= p) ++d;
  return d;
}

BlockRecord make_record(const CampaignConfig& cfg, const CatalogGroup& g, std::uint32_t p, unsigned m,
                        const blocks::Block& b, const cohom::CohDims& hh, const bounds::BoundTable& table) {
  BlockRecord r;
  r.group = g.name;
  r.order = g.group->order();
  r.p = p;
  r.field_degree = m;
  r.block = b.index;
  r.dim = b.idem.dim;
  r.center_dim = b.idem.center_dim;
  r.defect = b.defect;
  r.defect_group_order = b.defect_group.size();
  r.brauer_pairs = b.pairs.size();
  r.hh = hh;
  for (unsigned n = 0; n <= cfg.max_n; ++n) {
    std::optional<bounds::BigInt> f;
    if (b.defect <= table.max_d && n <= table.max_n) f = table.at(n, b.defect);
    r.f.push_back(f);
    if (!f) {
      r.status.push_back(Outcome::skipped);
      r.reasons.push_back("c(" + std::to_string(b.defect) + ") unavailable");
    } else {
      r.status.push_back(bounds::BigInt(hh[n]) <= *f ? Outcome::pass : Outcome::fail);
      r.reasons.emplace_back();
    }
  }
  r.center_ok = hh[0] == b.idem.center_dim;
  const bounds::BigInt bf = b.defect == 0 ? bounds::BigInt(1) : bounds::brauer_feit_term(p, b.defect);
  r.brauer_feit_ok = bounds::BigInt(hh[0]) <= bf;
  return r;
}

cohom::CheckResult guarded(const std::string& name, const std::function<cohom::CheckResult()>& run) {
  try {
    return run();
  } catch (const CapExceeded& e) {
    cohom::CheckResult r;
    r.check = name;
    r.status = cohom::Status::skipped;
    r.reason = std::string("skipped (cap): ") + e.what();
    return r;
  }
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      return "skipped";
  }
  return "skipped";
}

std::vector<CatalogGroup> collect_groups(const std::vector<std::filesystem::path>& catalogs, std::size_t max_order) {
  std::set<std::filesystem::path> files;
  for (const auto& c : catalogs) {
    if (std::filesystem::is_directory(c)) {
      for (const auto& e : std::filesystem::recursive_directory_iterator(c)) {
        if (e.is_regular_file() && e.path().extension() == ".json") add_group_files(e.path(), files);
      }
    } else {
      add_group_files(c, files);
    }
  }
  std::vector<CatalogGroup> out;
  for (const auto& f : files) {
    try {
      auto g = std::make_shared<grp::FiniteGroup>(grp::load_group(f, max_order));
      if (g->order() > max_order) continue;
      std::string name = g->name().empty() ? f.stem().string() : g->name();
      out.push_back(CatalogGroup{std::move(name), f, std::move(g)});
    } catch (const CapExceeded&) {
      // Larger than the campaign cap.
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogGroup& a, const CatalogGroup& b) {
    return std::tie(a.name, a.path) < std::tie(b.name, b.path);
  });
  return out;
}

bool Report::passed() const {
  for (const auto& r : results) {
    if (std::find(r.status.begin(), r.status.end(), Outcome::fail) != r.status.end()) return false;
    if (!r.center_ok || !r.brauer_feit_ok || r.oracle == Outcome::fail) return false;
  }
  for (const auto& l : lemma_checks) {
    if (l.result.status == cohom::Status::fail) return false;
  }
  for (const auto& i : issues) {
    if (i.outcome == Outcome::fail) return false;
  }
  return true;
}

Report run_group(const CampaignConfig& cfg, const CatalogGroup& g, std::uint32_t p, const bounds::BoundTable& table) {
  Report rep;
  const unsigned m = cfg.field_degree.value_or(blocks::required_field_degree(*g.group, p)) * cfg.degree_factor;
  try {
    const galg::GroupAlgebra a(g.group, la::ff_make(p, m));
    const auto blocks = blocks::analyze_blocks(a);
    const cohom::Resolution res = cohom::build_resolution(g.group, a.field_ptr(), cfg.max_n, cfg.resolution_cap);
    for (const auto& b : blocks) {
      const auto hh = cohom::hochschild_dims(a, b.idem.idem, cfg.max_n, res);
      BlockRecord r = make_record(cfg, g, p, m, b, hh, table);
      if (cfg.check_oracle) {
        const unsigned on = std::min(cfg.max_n, 2u);
        try {
          const auto oracle = cohom::hochschild_dims_bimodule_oracle(a, b.idem.idem, on, cfg.oracle_caps);
          r.oracle = std::equal(oracle.begin(), oracle.end(), hh.begin()) ? Outcome::pass : Outcome::fail;
        } catch (const CapExceeded& e) {
          r.oracle_reason = std::string("skipped (cap): ") + e.what();
        }
      } else {
        r.oracle_reason = "not requested";
      }
      rep.results.push_back(std::move(r));
      if (!cfg.check_lemmas) continue;
      const unsigned n = cfg.max_n;
      auto add = [&](cohom::CheckResult c) { rep.lemma_checks.push_back(LemmaRecord{g.name, p, b.index, std::move(c)}); };
      add(guarded("transfer_surjectivity", [&] { return cohom::check_transfer_surjectivity(a, b, n, res); }));
      add(guarded("brauer_pair_decomposition",
                  [&] { return cohom::check_brauer_decomposition(a, b, n, res, cfg.decomposition_max_order); }));
      add(guarded("brauer_pair_inequality",
                  [&] { return cohom::check_brauer_pair_inequality(a, b, n, res, cfg.resolution_cap); }));
      add(guarded("central_quotient_bound",
                  [&] { return cohom::check_central_quotient_bound(a, b, n, res, cfg.resolution_cap); }));
    }
  } catch (const CapExceeded& e) {
    rep.results.clear();
    rep.lemma_checks.clear();
    rep.issues.push_back(JobIssue{g.name, p, Outcome::skipped, std::string("skipped (cap): ") + e.what()});
  } catch (const std::exception& e) {
    rep.results.clear();
    rep.lemma_checks.clear();
    rep.issues.push_back(JobIssue{g.name, p, Outcome::fail, e.what()});
  }
  return rep;
}

Report run_verify(const CampaignConfig& cfg) {
  for (std::uint32_t p : cfg.primes) {
    if (!la::is_prime(p)) throw Error("not a prime: " + std::to_string(p));
  }
  const auto groups = collect_groups(cfg.catalogs, cfg.max_order);

  bounds::Catalog manifests;
  for (const auto& dir : cfg.manifest_dirs) {
    bounds::Catalog c = bounds::Catalog::scan(dir);
    for (std::uint32_t p : cfg.primes) {
      for (unsigned d = 1; d <= valuation_bound(cfg.max_order, p); ++d) {
        if (const auto* m = c.find(p, d)) manifests.add(*m);
      }
    }
  }
  std::map<std::uint32_t, bounds::BoundTable> tables;
  for (std::uint32_t p : cfg.primes) {
    tables[p] = bounds::make_bound_table(p, cfg.max_n, static_cast<unsigned>(valuation_bound(cfg.max_order, p)),
                                         manifests);
  }

  struct Job {
    std::size_t group;
    std::uint32_t p;
  };
  std::vector<std::uint32_t> primes = cfg.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::uint32_t p : primes) jobs.push_back(Job{i, p});
  }
  std::vector<Report> parts(jobs.size());
  const auto njobs = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < njobs; ++j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    parts[static_cast<std::size_t>(j)] = run_group(cfg, groups[job.group], job.p, tables.at(job.p));
  }

  Report rep;
  rep.config = cfg;
  for (auto& part : parts) {
    for (auto& r : part.results) rep.results.push_back(std::move(r));
    for (auto& l : part.lemma_checks) rep.lemma_checks.push_back(std::move(l));
    for (auto& i : part.issues) rep.issues.push_back(std::move(i));
  }
  return rep;
}

}  // namespace hhb::harness
