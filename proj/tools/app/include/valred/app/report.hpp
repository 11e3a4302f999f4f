#pragma once

#include <string>

#include <json.hpp>

#include "valred/app/runner.hpp"

namespace valred::app {

inline constexpr const char* kReportSchema = "valred.report/1";

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);
/// "text" or "json".
std::string render(const Report& report, const std::string& format);

/// Drops every "timing" member, recursively.
nlohmann::ordered_json strip_timing(nlohmann::ordered_json j);

}  // namespace valred::app
