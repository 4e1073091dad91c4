#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhb::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// floor(p^{2d} / 4 + 1) for d >= 1.
BigInt brauer_feit_term(std::uint32_t p, unsigned d);

/// A manifest declaring which group files make up all groups of order p^d.
struct CatalogManifest {
  std::uint32_t p = 0;
  unsigned d = 0;
  bool complete = false;
  std::vector<std::filesystem::path> groups;  // resolved against the manifest directory
};

CatalogManifest load_manifest(const std::filesystem::path& path);

/// Manifests indexed by (p, d).
class Catalog {
 public:
  Catalog() = default;
  /// Every JSON file below dir with the keys "p", "d" and "groups".
  static Catalog scan(const std::filesystem::path& dir);
  void add(CatalogManifest m);
  const CatalogManifest* find(std::uint32_t p, unsigned d) const;

 private:
  std::map<std::pair<std::uint32_t, unsigned>, CatalogManifest> manifests_;
};

inline constexpr const char* kExactCatalog = "exact-catalog";
inline constexpr const char* kUnavailable = "unavailable";

struct SubgroupMax {
  std::optional<std::size_t> value;
  std::string source;  // kExactCatalog or kUnavailable
};

/// c(d): the largest number of subgroups of a group of order p^d, taken over
/// a manifest that declares itself complete. c(0) = 1. Throws hhb::Error if
/// a listed group does not have order p^d.
SubgroupMax c_max_subgroups(std::uint32_t p, unsigned d, const Catalog& catalog);

/// f(n, d) for n <= max_n, d <= max_d. Entries that need an unavailable c
/// are empty.
struct BoundTable {
  std::uint32_t p = 0;
  unsigned max_n = 0;
  unsigned max_d = 0;
  std::vector<std::vector<std::optional<BigInt>>> f;  // [n][d]
  std::vector<SubgroupMax> c;                         // [d]

  const std::optional<BigInt>& at(unsigned n, unsigned d) const { return f.at(n).at(d); }
};

BoundTable make_bound_table(std::uint32_t p, unsigned max_n, unsigned max_d, const Catalog& catalog);

std::optional<BigInt> f_bound(std::uint32_t p, unsigned n, unsigned d, const Catalog& catalog);

/// True when x does not fit in an unsigned 64-bit integer.
bool exceeds_64_bits(const BigInt& x);

}  // namespace hhb::bounds
