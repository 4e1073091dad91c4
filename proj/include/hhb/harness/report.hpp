#pragma once

#include <string>

#include <json.hpp>

#include "hhb/harness/campaign.hpp"

namespace hhb::harness {

/// {"config": ..., "results": [...], "lemmaChecks": [...], "issues": [...]}
nlohmann::ordered_json report_json(const Report& r);

/// One row per (block, degree).
std::string report_csv(const Report& r);

}  // namespace hhb::harness
