#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valred/freealg.hpp"
#include "valred/lattice.hpp"
#include "valred/valued_field.hpp"

namespace valred::app {

struct FieldConfig {
  std::string kind = "rationals";  // rationals | rational_functions
  std::string base = "Q";          // Q | F_p
  std::vector<std::string> vars;
  std::uint32_t p = 0;
  std::string valuation;  // p-adic | order-at-X | lex-monomial; empty = inferred
};

/// A lattice given directly: IdealSum summands "Cut : v1, v2, ..." or FG
/// generator rows, plus probe vectors for membership.
struct LatticeConfig {
  std::size_t dim = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> summands;
  std::vector<std::vector<std::string>> generators;
  std::vector<std::vector<std::string>> probes;
};

struct RunConfig {
  std::string title;
  FieldConfig field;
  std::vector<std::pair<std::string, std::string>> constants;
  std::vector<std::string> generators;
  std::vector<int> weights;
  std::vector<std::string> relations;
  FiltrationMode mode = FiltrationMode::Filtered;
  std::optional<LatticeConfig> lattice;
  std::vector<std::string> checks;
  int max_degree = 6;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  /// Generators of a subalgebra for the subalgebra check.
  std::vector<std::string> subalgebra;
  std::string source;
};

/// Sectioned key-value text. Throws ConfigError with line and field.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

ValuedField make_field(const RunConfig& config);
Presentation make_presentation(const RunConfig& config);
Lattice make_lattice(const RunConfig& config, const ValuedField& field);
Cut parse_cut(const std::string& text);

struct CheckInfo {
  std::string name;
  std::string definition;
  std::string anchor;
};

/// Known checks in execution order.
const std::vector<CheckInfo>& check_registry();
/// UnknownCheckError for names outside the registry.
const CheckInfo& find_check(std::string_view name);
std::string explain(std::string_view name);

}  // namespace valred::app
