#pragma once

#include <filesystem>

#include <json.hpp>

#include "hhb/grp/group.hpp"

namespace hhb::grp {

/// Parses a group description: {"name", "generators"} with 1-based
/// permutation images, or {"name", "table"} with a 0-based table. Exactly
/// one of the two keys must be present.
FiniteGroup group_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxOrder);

/// Reads a group file; errors name the file.
FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order = kDefaultMaxOrder);

}  // namespace hhb::grp
