#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "valred/app/catalog.hpp"
#include "valred/app/config.hpp"
#include "valred/app/report.hpp"
#include "valred/app/runner.hpp"
#include "valred/errors.hpp"

using namespace valred;
using namespace valred::app;

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valred: reductors of filtered algebras over valued fields"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::optional<int> max_degree;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", max_degree, "degree bound N")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", seed, "seed for extra random pool elements");
    sub->add_option("--out", out_path, "write the report to a file");
  };

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "run the checks listed in a config file");
  run_cmd->add_option("config", config_path, "config file")->required();
  common(run_cmd);

  std::string example_name;
  auto* example_cmd = app.add_subcommand("example", "run a catalog example against its expected facts");
  example_cmd->add_option("name", example_name, "example name, or 'all'")->required();
  common(example_cmd);

  app.add_subcommand("list-examples", "list catalog examples");

  std::string check_name;
  auto* explain_cmd = app.add_subcommand("explain", "show what a check verifies");
  explain_cmd->add_option("check", check_name, "check name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      RunConfig cfg = load_config(config_path);
      if (max_degree) cfg.max_degree = *max_degree;
      if (seed) cfg.seed = seed;
      if (!format.empty()) cfg.format = format;
      const Report report = run(cfg);
      if (int rc = emit(render(report, cfg.format), out_path)) return rc;
      return report.passed() ? 0 : 1;
    }
    if (*example_cmd) {
      const int n = max_degree.value_or(6);
      const bool json = format == "json";
      if (example_name == "all") {
        const Summary s = run_all(n);
        if (int rc = emit(json ? to_json(s).dump(2) + "\n" : to_text(s), out_path)) return rc;
        return s.mismatch_count() == 0 ? 0 : 1;
      }
      const EntryOutcome o = run_example(get_example(example_name), n);
      if (int rc = emit(json ? to_json(o).dump(2) + "\n" : to_text(o), out_path)) return rc;
      return o.mismatches.empty() ? 0 : 1;
    }
    if (app.got_subcommand("list-examples")) {
      for (const auto& e : catalog()) std::cout << e.name << "  " << e.summary << "\n";
      return 0;
    }
    if (*explain_cmd) {
      std::cout << explain(check_name);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownExampleError& e) {
    std::cerr << "unknown example: " << e.what() << "\n";
    return 2;
  } catch (const UnknownCheckError& e) {
    std::cerr << "unknown check: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
