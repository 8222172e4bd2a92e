#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "skl/checks.hpp"

namespace skl {

struct Report {
    std::string generated;  // ISO 8601, UTC
    Config config;
    std::vector<CheckResult> results;

    bool all_passed() const;
};

Report make_report(const Config& cfg, std::vector<CheckResult> results);

nlohmann::json report_to_json(const Report& r);
/// Inverse of report_to_json. Throws ConfigError on missing or
/// ill-typed fields.
Report report_from_json(const nlohmann::json& j);

std::string report_markdown(const Report& r);

/// Serialized in the requested format (r.config.format).
std::string report_render(const Report& r);

}  // namespace skl
