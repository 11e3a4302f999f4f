#include "valred/app/report.hpp"

#include <sstream>

namespace valred::app {

using nlohmann::ordered_json;

namespace {

ordered_json facts_json(const Facts& facts) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : facts) j[k] = v;
  return j;
}

}  // namespace

ordered_json to_json(const Report& report) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["title"] = report.title;
  j["field"] = report.field;
  j["max_degree"] = report.max_degree;
  j["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
  j["input_digest"] = report.input_digest;
  j["build"] = {{"ok", report.build_ok}, {"error", report.build_error}};
  ordered_json layers = ordered_json::array();
  for (const auto& l : report.layers) {
    layers.push_back({{"degree", l.degree},
                      {"dim", l.dim},
                      {"rank", l.rank},
                      {"residue_dim", l.residue_dim},
                      {"is_lattice", l.is_lattice},
                      {"unramified", l.unramified},
                      {"nested", l.nested}});
  }
  j["layers"] = layers;
  j["facts"] = facts_json(report.facts);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["summary"] = c.summary;
    cj["facts"] = facts_json(c.facts);
    cj["lines"] = c.lines;
    cj["error"] = c.error ? ordered_json(*c.error) : ordered_json(nullptr);
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  j["passed"] = report.passed();
  j["timing"] = {{"elapsed_ms", report.elapsed_ms}};
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << (report.title.empty() ? "(untitled)" : report.title) << "\n";
  out << "field: " << report.field << "\n";
  out << "degree bound: " << report.max_degree << "\n";
  if (!report.build_ok) out << "build failed: " << report.build_error << "\n";
  if (!report.layers.empty()) {
    out << "  n  dim  rank  res  unram  nested\n";
    for (const auto& l : report.layers) {
      out << "  " << l.degree << "  " << l.dim << "  " << l.rank << "  " << l.residue_dim << "  "
          << (l.unramified ? "yes" : "no") << "  " << (l.nested ? "yes" : "no") << "\n";
    }
  }
  for (const auto& c : report.checks) {
    out << "[" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.summary << "\n";
    for (const auto& [k, v] : c.facts) out << "    " << k << " = " << v << "\n";
    for (const auto& line : c.lines) out << "    | " << line << "\n";
  }
  out << (report.passed() ? "passed" : "failed") << " (" << report.elapsed_ms << " ms)\n";
  return out.str();
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return to_json(report).dump(2) + "\n";
  return to_text(report);
}

ordered_json strip_timing(ordered_json j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace valred::app
