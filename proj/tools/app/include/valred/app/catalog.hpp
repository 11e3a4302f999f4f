#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "valred/app/runner.hpp"

namespace valred::app {

/// Expected facts for an effective degree bound n.
using Expectations = std::function<Facts(int n)>;

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string config;
  int degree_bound = 6;
  Expectations expected;
};

const std::vector<CatalogEntry>& catalog();
/// UnknownExampleError for names outside the catalog.
const CatalogEntry& get_example(std::string_view name);

struct EntryOutcome {
  std::string name;
  Report report;
  Facts expected;
  std::vector<std::string> mismatches;
};

/// Runs an entry at min(n, degree_bound). `tamper` overrides expected facts.
EntryOutcome run_example(const CatalogEntry& entry, int n,
                         const std::map<std::string, std::string>& tamper = {});

struct Summary {
  int max_degree = 0;
  std::vector<EntryOutcome> entries;
  std::size_t mismatch_count() const;
};

/// Every entry at degree bound n; tamper keys are "entry/fact".
Summary run_all(int n, const std::map<std::string, std::string>& tamper = {});

nlohmann::ordered_json to_json(const EntryOutcome& outcome);
nlohmann::ordered_json to_json(const Summary& summary);
std::string to_text(const EntryOutcome& outcome);
std::string to_text(const Summary& summary);

}  // namespace valred::app
