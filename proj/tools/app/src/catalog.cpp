#include "valred/app/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "valred/app/report.hpp"
#include "valred/errors.hpp"

namespace valred::app {

using nlohmann::ordered_json;

namespace {

std::string series(int n, const std::function<long(int)>& term) {
  std::string out;
  for (int d = 0; d <= n; ++d) {
    if (d) out += ",";
    out += std::to_string(term(d));
  }
  return out;
}

long binom3(int m) { return static_cast<long>(m + 1) * (m + 2) * (m + 3) / 6; }

const char* kQuadratic = R"(# F_5(X) adjoined a root of T^2 - (1 - X) T + X
[meta]
title = quadratic extension of F_5(X)
[field]
kind = rational_functions
base = F_5
vars = X
[algebra]
generators = xi
relation = xi*xi = (1-X)*xi - X
[checks]
run = confluence, strategy, unramified, reduction, valuation_axioms, valuation_ring, connection, lemma_identities, strong
)";

const char* kUsl2 = R"([meta]
title = enveloping algebra of sl2 over Q, 3-adic
[field]
kind = rationals
p = 3
[algebra]
generators = f, h, e
relation = e*f = f*e + h
relation = h*f = f*h - 2*f
relation = e*h = h*e - 2*e
[checks]
run = confluence, strategy, unramified, reduction, symbols_commute, crossed, strong, lemma_identities, connection, subalgebra
subalgebra = h
)";

const char* kWeyl = R"([meta]
title = first Weyl algebra over Q, 3-adic
[field]
kind = rationals
p = 3
[algebra]
generators = X, D
relation = D*X = X*D + 1
[checks]
run = confluence, strategy, unramified, reduction, valuation_axioms, symbols_commute, crossed, strong, connection
)";

const char* kQuantumPlane = R"([meta]
title = quantum plane q = 2 over Q, 3-adic
[field]
kind = rationals
p = 3
[constants]
q = 2
[algebra]
generators = Y, X
relation = X*Y = q*Y*X
filtration = graded
[checks]
run = confluence, strategy, unramified, reduction, valuation_axioms, symbols_commute, strong, lemma_identities, connected_graded, tensor_square
)";

const char* kQuantumWeyl = R"([meta]
title = quantum Weyl algebra q = 2 over Q, 3-adic
[field]
kind = rationals
p = 3
[constants]
q = 2
[algebra]
generators = Y, X
relation = X*Y = q*Y*X + 1
[checks]
run = confluence, strategy, unramified, reduction, valuation_axioms, connection
)";

const char* kRamifiedLattice = R"([meta]
title = rank 2 lattice with a non-principal summand
[field]
kind = rational_functions
base = Q
vars = X, Y
[lattice]
dim = 2
summand = Principal((0,0)) : 1, 0
summand = Limit(1) : 0, 1
probe = 0, X/Y^100
probe = 1/Y, 0
probe = 0, Y
probe = 1, X
[checks]
run = unramified, membership
)";

const char* kBadQ = R"([meta]
title = quantum plane q = 1/3 over Q, 3-adic
[field]
kind = rationals
p = 3
[constants]
q = 1/3
[algebra]
generators = Y, X
relation = X*Y = q*Y*X
filtration = graded
[checks]
run = confluence, unramified
)";

Facts quadratic_expected(int n) {
  Facts f{{"build.status", "ok"},
          {"layers.dims", series(n, [](int d) { return d == 0 ? 1L : 2L; })},
          {"layers.ranks", series(n, [](int d) { return d == 0 ? 1L : 2L; })},
          {"confluence.unresolved", "0"},
          {"unramified.all", "true"},
          {"connection.agree", "true"}};
  if (n >= 2) {
    f.emplace_back("reduction.rules", "xi * xi = xi");
    f.emplace_back("valuation_axioms.verdict", "counterexample");
    f.emplace_back("valuation_axioms.witness", "(xi, xi - 1)");
    f.emplace_back("valuation_axioms.values", "(0), (0) -> (1)");
    f.emplace_back("valuation_ring.verdict", "false");
    f.emplace_back("valuation_ring.minimal_polynomial", "T^2 - T");
  } else {
    f.emplace_back("valuation_axioms.verdict", "valuation");
  }
  return f;
}

Facts usl2_expected(int n) {
  const int m = std::min(n, 4);
  Facts f{{"build.status", "ok"},
          {"layers.dims", series(n, binom3)},
          {"layers.ranks", series(n, binom3)},
          {"confluence.unresolved", "0"},
          {"unramified.all", "true"},
          {"symbols_commute.verdict", "commute"},
          {"crossed.verdict", "true"},
          {"strong.verdict", "true"},
          {"lemma_identities.verdict", "true"},
          {"connection.agree", "true"}};
  if (n >= 1) f.emplace_back("subalgebra.ranks", series(m, [](int d) { return d + 1L; }));
  if (n >= 2) f.emplace_back("reduction.rules", "e * f = f*e + h; h * f = f*h + f; e * h = h*e + e");
  return f;
}

long triangle(int d) { return static_cast<long>(d + 1) * (d + 2) / 2; }

Facts weyl_expected(int n) {
  Facts f{{"build.status", "ok"},
          {"layers.dims", series(n, triangle)},
          {"confluence.unresolved", "0"},
          {"unramified.all", "true"},
          {"valuation_axioms.verdict", "valuation"},
          {"symbols_commute.verdict", "commute"},
          {"connection.agree", "true"}};
  if (n >= 2) f.emplace_back("reduction.rules", "D * X = X*D + 1");
  return f;
}

Facts quantum_plane_expected(int n) {
  Facts f{{"build.status", "ok"},
          {"layers.dims", series(n, triangle)},
          {"layers.graded_ranks", series(n, [](int d) { return d + 1L; })},
          {"unramified.all", "true"},
          {"valuation_axioms.verdict", "valuation"},
          {"strong.verdict", "true"},
          {"lemma_identities.verdict", "true"},
          {"connected_graded.verdict", "true"},
          {"tensor_square.dims", series(std::min(n, 4), binom3)},
          {"tensor_square.unramified", "true"}};
  if (n >= 1) f.emplace_back("connected_graded.degree_one_residue_dim", "2");
  if (n >= 2) {
    f.emplace_back("reduction.rules", "X * Y = 2*Y*X");
    f.emplace_back("symbols_commute.verdict", "noncommuting");
  }
  return f;
}

Facts quantum_weyl_expected(int n) {
  Facts f{{"build.status", "ok"},
          {"layers.dims", series(n, triangle)},
          {"unramified.all", "true"},
          {"valuation_axioms.verdict", "valuation"},
          {"connection.agree", "true"}};
  if (n >= 2) f.emplace_back("reduction.rules", "X * Y = 2*Y*X + 1");
  return f;
}

Facts lattice_expected(int) {
  return {{"unramified.residue_dim", "1"},
          {"unramified.ambient_dim", "2"},
          {"unramified.verdict", "false"},
          {"membership.results", "true,false,false,true"}};
}

Facts bad_q_expected(int n) {
  if (n < 2) return {{"build.status", "ok"}};
  return {{"build.status", "CoefficientEscape(degree=2, word=X*Y)"}};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"quadratic_ext", "F_5(X)[xi] with a reduction that splits", kQuadratic, 6, quadratic_expected},
      {"usl2", "U(sl2) over Q with the 3-adic valuation", kUsl2, 5, usl2_expected},
      {"weyl_a1", "first Weyl algebra", kWeyl, 6, weyl_expected},
      {"quantum_plane", "graded quantum plane, q = 2", kQuantumPlane, 6, quantum_plane_expected},
      {"quantum_weyl", "quantum Weyl algebra, q = 2", kQuantumWeyl, 6, quantum_weyl_expected},
      {"ramified_lattice", "IdealSum lattice with residue dimension 1 in K^2", kRamifiedLattice, 6,
       lattice_expected},
      {"bad_q_plane", "quantum plane with q outside O_v", kBadQ, 6, bad_q_expected},
  };
  return entries;
}

const CatalogEntry& get_example(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw UnknownExampleError(std::string(name));
}

EntryOutcome run_example(const CatalogEntry& entry, int n, const std::map<std::string, std::string>& tamper) {
  RunConfig cfg = parse_config(entry.config);
  cfg.max_degree = std::min(n, entry.degree_bound);
  EntryOutcome out;
  out.name = entry.name;
  out.report = run(cfg);
  out.expected = entry.expected(cfg.max_degree);
  for (const auto& [k, v] : tamper) {
    auto it = std::find_if(out.expected.begin(), out.expected.end(), [&](const auto& kv) { return kv.first == k; });
    if (it == out.expected.end()) {
      out.expected.emplace_back(k, v);
    } else {
      it->second = v;
    }
  }
  for (const auto& [k, v] : out.expected) {
    const auto actual = out.report.fact(k);
    if (!actual) {
      out.mismatches.push_back(k + ": missing, expected '" + v + "'");
    } else if (*actual != v) {
      out.mismatches.push_back(k + ": expected '" + v + "', got '" + *actual + "'");
    }
  }
  return out;
}

std::size_t Summary::mismatch_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.mismatches.size();
  return n;
}

Summary run_all(int n, const std::map<std::string, std::string>& tamper) {
  Summary s;
  s.max_degree = n;
  for (const auto& entry : catalog()) {
    std::map<std::string, std::string> mine;
    const std::string prefix = entry.name + "/";
    for (const auto& [k, v] : tamper) {
      if (k.rfind(prefix, 0) == 0) mine.emplace(k.substr(prefix.size()), v);
    }
    s.entries.push_back(run_example(entry, n, mine));
  }
  return s;
}

ordered_json to_json(const EntryOutcome& outcome) {
  ordered_json expected = ordered_json::object();
  for (const auto& [k, v] : outcome.expected) expected[k] = v;
  ordered_json j;
  j["name"] = outcome.name;
  j["matches"] = outcome.mismatches.empty();
  j["mismatches"] = outcome.mismatches;
  j["expected"] = expected;
  j["report"] = to_json(outcome.report);
  return j;
}

ordered_json to_json(const Summary& summary) {
  ordered_json j;
  j["schema"] = "valred.catalog/1";
  j["tool_version"] = kToolVersion;
  j["max_degree"] = summary.max_degree;
  ordered_json entries = ordered_json::array();
  for (const auto& e : summary.entries) entries.push_back(to_json(e));
  j["entries"] = entries;
  j["mismatch_count"] = summary.mismatch_count();
  return j;
}

std::string to_text(const EntryOutcome& outcome) {
  std::ostringstream out;
  out << to_text(outcome.report);
  out << "expected facts: " << outcome.expected.size() << ", mismatches: " << outcome.mismatches.size() << "\n";
  for (const auto& m : outcome.mismatches) out << "  MISMATCH " << m << "\n";
  return out.str();
}

std::string to_text(const Summary& summary) {
  std::ostringstream out;
  for (const auto& e : summary.entries) {
    out << e.name << ": " << (e.mismatches.empty() ? "as expected" : "MISMATCH") << " ("
        << e.expected.size() << " facts, degree " << e.report.max_degree << ")\n";
    for (const auto& m : e.mismatches) out << "  " << m << "\n";
  }
  out << summary.mismatch_count() << " mismatches\n";
  return out.str();
}

}  // namespace valred::app
