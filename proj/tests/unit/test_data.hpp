#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

namespace hhb::test {

inline std::filesystem::path data_dir() { return HHB_DATA_DIR; }

inline std::filesystem::path group_file(const std::string& name) {
  return data_dir() / "groups" / (name + ".json");
}

inline std::vector<std::filesystem::path> catalog_group_files() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() / "groups")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace hhb::test
