#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valred/app/config.hpp"
#include "valred/reductor.hpp"

namespace valred::app {

using Facts = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string summary;
  Facts facts;
  std::vector<std::string> lines;
  std::optional<std::string> error;
};

struct Report {
  std::string title;
  std::string field;
  int max_degree = 0;
  std::optional<std::uint64_t> seed;
  std::string input_digest;
  bool build_ok = true;
  std::string build_error;
  std::vector<LayerInfo> layers;
  /// Facts not tied to one check ("build.status", "layers.dims", ...).
  Facts facts;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool passed() const;
  /// Looks up "key" among report facts and "check.key" among check facts.
  std::optional<std::string> fact(const std::string& key) const;
};

/// Runs the requested checks in registry order. Check failures and errors
/// are recorded in the report, never thrown.
Report run(const RunConfig& config);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace valred::app
