#include "hhb/bounds/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <json.hpp>

#include "hhb/error.hpp"
#include "hhb/grp/io.hpp"

namespace hhb::bounds {

BigInt brauer_feit_term(std::uint32_t p, unsigned d) {
  if (d == 0) throw Error("brauer_feit_term: d must be positive");
  BigInt q = boost::multiprecision::pow(BigInt(p), 2 * d);
  return q / 4 + 1;
}

CatalogManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(path.string() + ": cannot open manifest");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    CatalogManifest m;
    m.p = j.at("p").get<std::uint32_t>();
    m.d = j.at("d").get<unsigned>();
    m.complete = j.value("complete", false);
    for (const auto& g : j.at("groups")) m.groups.push_back(path.parent_path() / g.get<std::string>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": invalid manifest: " + e.what());
  }
}

Catalog Catalog::scan(const std::filesystem::path& dir) {
  Catalog c;
  if (!std::filesystem::is_directory(dir)) throw Error(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.contains("p") && j.contains("d") && j.contains("groups")) c.add(load_manifest(f));
  }
  return c;
}

void Catalog::add(CatalogManifest m) {
  const auto key = std::make_pair(m.p, m.d);
  auto it = manifests_.find(key);
  // A complete manifest wins over an incomplete one for the same order.
  if (it == manifests_.end() || (!it->second.complete && m.complete)) manifests_[key] = std::move(m);
}

const CatalogManifest* Catalog::find(std::uint32_t p, unsigned d) const {
  auto it = manifests_.find({p, d});
  return it == manifests_.end() ? nullptr : &it->second;
}

SubgroupMax c_max_subgroups(std::uint32_t p, unsigned d, const Catalog& catalog) {
  if (d == 0) return {1, kExactCatalog};
  const CatalogManifest* m = catalog.find(p, d);
  if (m == nullptr || !m->complete) return {std::nullopt, kUnavailable};
  std::size_t order = 1;
  for (unsigned i = 0; i < d; ++i) order *= p;
  std::size_t best = 0;
  for (const auto& path : m->groups) {
    const grp::FiniteGroup g = grp::load_group(path);
    if (g.order() != order) {
      throw Error(path.string() + ": order " + std::to_string(g.order()) + " listed under order " +
                  std::to_string(order));
    }
    best = std::max(best, grp::all_subgroups(g).size());
  }
  return {best, kExactCatalog};
}

BoundTable make_bound_table(std::uint32_t p, unsigned max_n, unsigned max_d, const Catalog& catalog) {
  BoundTable t;
  t.p = p;
  t.max_n = max_n;
  t.max_d = max_d;
  t.f.assign(max_n + 1, std::vector<std::optional<BigInt>>(max_d + 1));
  for (unsigned d = 0; d <= max_d; ++d) t.c.push_back(c_max_subgroups(p, d, catalog));
  t.f[0][0] = BigInt(1);
  for (unsigned n = 1; n <= max_n; ++n) t.f[n][0] = BigInt(0);
  for (unsigned d = 1; d <= max_d; ++d) {
    t.f[0][d] = brauer_feit_term(p, d);
    BigInt partial = 0;
    bool available = t.c[d].value.has_value();
    for (unsigned n = 1; n <= max_n && available; ++n) {
      // sum_{i <= n} f(i, d-1), built up incrementally.
      if (n == 1) {
        if (!t.f[0][d - 1]) break;
        partial = *t.f[0][d - 1];
      }
      if (!t.f[n][d - 1]) break;
      partial += *t.f[n][d - 1];
      t.f[n][d] = BigInt(p) * BigInt(*t.c[d].value) * partial;
    }
  }
  return t;
}

std::optional<BigInt> f_bound(std::uint32_t p, unsigned n, unsigned d, const Catalog& catalog) {
  return make_bound_table(p, n, d, catalog).at(n, d);
}

bool exceeds_64_bits(const BigInt& x) { return x > BigInt(std::numeric_limits<std::uint64_t>::max()); }

}  // namespace hhb::bounds
