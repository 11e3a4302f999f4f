#include <doctest.h>

#include "valred/app/catalog.hpp"
#include "valred/app/config.hpp"
#include "valred/app/report.hpp"
#include "valred/app/runner.hpp"
#include "valred/errors.hpp"

using namespace valred;
using namespace valred::app;

namespace {

const char* kPlane = R"([field]
kind = rationals
p = 3
[constants]
q = 2
[algebra]
generators = Y, X
relation = X*Y = q*Y*X
filtration = graded
[checks]
run = valuation_axioms, unramified
)";

ConfigError config_error(const std::string& text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError");
  return ConfigError("", 0, "");
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(kPlane);
  CHECK(c.generators == std::vector<std::string>{"Y", "X"});
  CHECK(c.mode == FiltrationMode::Graded);
  CHECK(c.constants.size() == 1);
  CHECK(c.checks == std::vector<std::string>{"valuation_axioms", "unramified"});
  CHECK(c.max_degree == 6);
  CHECK_FALSE(c.seed);
  const RunConfig commented = parse_config(std::string(kPlane) + "max_degree = 4   # small\n");
  CHECK(commented.max_degree == 4);
}

TEST_CASE("config errors carry line and field") {
  std::string empty = kPlane;
  empty.replace(empty.find("valuation_axioms, unramified"), 28, "");
  const auto e1 = config_error(empty);
  CHECK(e1.field() == "checks.run");
  CHECK(e1.line() == 11);

  std::string unknown = kPlane;
  unknown.replace(unknown.find("unramified"), 10, "bogus");
  CHECK(config_error(unknown).field() == "checks.run");

  std::string bad_key = kPlane;
  bad_key.replace(bad_key.find("p = 3"), 5, "prime = 3");
  const auto e2 = config_error(bad_key);
  CHECK(e2.field() == "field.prime");
  CHECK(e2.line() == 3);

  std::string undefined = kPlane;
  undefined.replace(undefined.find("q = 2"), 5, "r = 2");
  CHECK(config_error(undefined).field() == "algebra.relation");

  CHECK(config_error("[nonsense]\n").line() == 1);
  CHECK(config_error("[checks]\nrun = unramified\n").field() == "field");
  std::string negative = std::string(kPlane) + "max_degree = -1\n";
  CHECK(config_error(negative).field() == "checks.max_degree");
}

TEST_CASE("runs report every requested check") {
  const Report r = run(parse_config(kPlane));
  CHECK(r.passed());
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].name == "unramified");
  CHECK(r.checks[1].name == "valuation_axioms");
  CHECK(r.fact("layers.graded_ranks") == "1,2,3,4,5,6,7");

  RunConfig bad = parse_config(get_example("bad_q_plane").config);
  const Report b = run(bad);
  CHECK_FALSE(b.passed());
  CHECK(b.fact("build.status") == "CoefficientEscape(degree=2, word=X*Y)");
  CHECK(b.checks.back().error);
}

TEST_CASE("reports are deterministic apart from timing") {
  RunConfig c = parse_config(kPlane);
  c.seed = 11;
  const auto a = strip_timing(to_json(run(c)));
  const auto b = strip_timing(to_json(run(c)));
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a.contains("timing"));
  CHECK(a["schema"] == kReportSchema);
  CHECK(a["seed"] == 11);
  c.seed = 12;
  CHECK(strip_timing(to_json(run(c)))["input_digest"] != a["input_digest"]);
}

TEST_CASE("explain cites the source text") {
  CHECK(explain("crossed").find("the twisted group ring $\\overline{A}*{\\Gamma}$") != std::string::npos);
  CHECK(explain("strong").find("is ${\\Gamma}$-separated and strong") != std::string::npos);
  CHECK_THROWS_AS((void)explain("bogus"), UnknownCheckError);
  for (const auto& c : check_registry()) CHECK_FALSE(explain(c.name).empty());
}

TEST_CASE("catalog") {
  CHECK(catalog().size() == 7);
  CHECK_THROWS_AS((void)get_example("nope"), UnknownExampleError);
  const Facts weyl = get_example("weyl_a1").expected(6);
  const auto dims = std::find_if(weyl.begin(), weyl.end(), [](const auto& kv) { return kv.first == "layers.dims"; });
  REQUIRE(dims != weyl.end());
  CHECK(dims->second == "1,3,6,10,15,21,28");
}

TEST_CASE("a tampered expectation produces one named mismatch") {
  const Summary s = run_all(2, {{"weyl_a1/layers.dims", "1,3,7"}});
  CHECK(s.mismatch_count() == 1);
  for (const auto& e : s.entries) {
    if (e.name == "weyl_a1") {
      REQUIRE(e.mismatches.size() == 1);
      CHECK(e.mismatches[0].find("layers.dims") != std::string::npos);
    }
  }
}

TEST_CASE("degree zero runs only have degree-zero rows") {
  const Summary s = run_all(0);
  CHECK(s.mismatch_count() == 0);
  for (const auto& e : s.entries) {
    CHECK(e.report.layers.size() <= 1);
    for (const auto& l : e.report.layers) {
      CHECK(l.degree == 0);
      CHECK(l.unramified);
    }
  }
}
