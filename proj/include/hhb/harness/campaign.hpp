#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hhb/bounds/bounds.hpp"
#include "hhb/cohom/checks.hpp"
#include "hhb/cohom/hochschild_oracle.hpp"

namespace hhb::harness {

struct CampaignConfig {
  std::vector<std::uint32_t> primes = {2, 3};
  std::size_t max_order = 16;
  unsigned max_n = 3;
  /// Group files, group directories, or catalog manifests.
  std::vector<std::filesystem::path> catalogs;
  /// Where the subgroup-count manifests for c(d) are looked up.
  std::vector<std::filesystem::path> manifest_dirs;
  /// Forces GF(p^m) for every group instead of the splitting degree.
  std::optional<unsigned> field_degree;
  /// Multiplies the chosen field degree (2 for the field-stability rerun).
  unsigned degree_factor = 1;
  bool check_lemmas = false;
  /// Compare against the bimodule oracle for groups within the oracle caps.
  bool check_oracle = false;
  cohom::OracleCaps oracle_caps;
  /// Largest group order for the Brauer-pair decomposition check.
  std::size_t decomposition_max_order = 12;
  std::size_t resolution_cap = cohom::kDefaultResolutionCap;
};

struct CatalogGroup {
  std::string name;
  std::filesystem::path path;
  galg::GroupPtr group;
};

/// Groups named by the catalog paths with order <= max_order, ordered by
/// name then path. Directories are scanned recursively; manifests contribute
/// the groups they list. Throws hhb::Error naming a malformed file.
std::vector<CatalogGroup> collect_groups(const std::vector<std::filesystem::path>& catalogs, std::size_t max_order);

enum class Outcome { pass, fail, skipped };
std::string to_string(Outcome o);

struct BlockRecord {
  std::string group;
  std::size_t order = 0;
  std::uint32_t p = 0;
  unsigned field_degree = 0;
  std::size_t block = 0;
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  unsigned defect = 0;
  std::size_t defect_group_order = 0;
  std::size_t brauer_pairs = 0;
  std::vector<std::size_t> hh;
  std::vector<std::optional<bounds::BigInt>> f;
  std::vector<Outcome> status;  // hh[n] <= f(n, d) per degree
  std::vector<std::string> reasons;
  /// hh[0] equals the center dimension and does not exceed the Brauer-Feit
  /// term (f(0, 0) = 1 for defect zero).
  bool center_ok = false;
  bool brauer_feit_ok = false;
  /// Agreement with the bimodule oracle; skipped above its caps.
  Outcome oracle = Outcome::skipped;
  std::string oracle_reason;
};

struct LemmaRecord {
  std::string group;
  std::uint32_t p = 0;
  std::size_t block = 0;
  cohom::CheckResult result;
};

/// A (group, p) job that could not be run at all.
struct JobIssue {
  std::string group;
  std::uint32_t p = 0;
  Outcome outcome = Outcome::skipped;
  std::string reason;
};

struct Report {
  CampaignConfig config;
  std::vector<BlockRecord> results;
  std::vector<LemmaRecord> lemma_checks;
  std::vector<JobIssue> issues;

  /// No non-skipped comparison failed.
  bool passed() const;
};

/// Blocks, defects, HH dimensions and the bound comparison for every
/// (group, p) job, fanned out over threads and merged in (group, p, block)
/// order.
Report run_verify(const CampaignConfig& config);

/// Records and lemma checks for a single group.
Report run_group(const CampaignConfig& config, const CatalogGroup& group, std::uint32_t p,
                 const bounds::BoundTable& table);

}  // namespace hhb::harness
