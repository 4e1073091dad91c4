#include "hhb/grp/io.hpp"

#include <fstream>

#include "hhb/error.hpp"

namespace hhb::grp {

FiniteGroup group_from_json(const nlohmann::json& j, std::size_t max_order) {
  if (!j.is_object()) throw Error("group description must be a JSON object");
  const bool has_gens = j.contains("generators");
  const bool has_table = j.contains("table");
  if (has_gens == has_table) throw Error("group description needs exactly one of \"generators\" and \"table\"");
  const std::string name = j.value("name", std::string{});
  FiniteGroup g;
  try {
    if (has_gens) {
      const auto gens = j.at("generators").get<std::vector<Perm>>();
      std::size_t degree = gens.empty() ? 1 : gens.front().size();
      g = group_from_permutations(degree, gens, max_order);
    } else {
      const auto table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
      if (table.size() > max_order) throw CapExceeded("group table exceeds order cap");
      g = group_from_table(table);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed group description: ") + e.what());
  }
  g.set_name(name);
  return g;
}

FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path.string());
  try {
    return group_from_json(nlohmann::json::parse(in), max_order);
  } catch (const CapExceeded& e) {
    throw CapExceeded(path.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace hhb::grp
