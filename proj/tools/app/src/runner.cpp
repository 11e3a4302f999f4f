#include "valred/app/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "valred/errors.hpp"

namespace valred::app {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& items, F&& show, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += show(items[i]);
  }
  return out;
}

std::string flags(const std::vector<bool>& v) {
  return join(v, [](bool b) { return std::string(b ? "true" : "false"); });
}

std::string yes(bool b) { return b ? "true" : "false"; }

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

// FNV-1a, 64 bit.
std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<GroupElement> gamma_samples(const ValuedField& f) {
  std::vector<GroupElement> out;
  if (f.rank() == 1) {
    for (int a = -2; a <= 2; ++a) out.push_back(GroupElement{a});
  } else {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) out.push_back(GroupElement{a, b});
    }
  }
  return out;
}

struct Context {
  const RunConfig& config;
  const Presentation& pres;
  const Reductor& red;
};

using Handler = std::function<void(const Context&, CheckResult&)>;

void check_unramified(const Context& c, CheckResult& res) {
  const UnramifiedReport u = valred::check_unramified(c.red);
  res.facts.emplace_back("filtered", flags(u.filtered));
  if (c.red.graded()) res.facts.emplace_back("graded", flags(u.graded));
  res.facts.emplace_back("all", yes(u.all()));
  res.passed = u.all();
  res.summary = res.passed ? "every F_n Lambda is an unramified lattice up to degree " + std::to_string(c.red.max_degree())
                           : "ramified at some degree";
}

void check_reduction(const Context& c, CheckResult& res) {
  const Reduction red = valred::reduction(c.red);
  std::vector<std::string> rules;
  for (const auto& rule : c.pres.rules()) {
    if (rule.lhs.size() != 2) continue;
    const std::string a = c.pres.generators()[rule.lhs.letters[0]];
    const std::string b = c.pres.generators()[rule.lhs.letters[1]];
    const auto ia = std::find(red.labels.begin(), red.labels.end(), a);
    const auto ib = std::find(red.labels.begin(), red.labels.end(), b);
    if (ia == red.labels.end() || ib == red.labels.end()) continue;
    const std::pair<std::size_t, std::size_t> key(static_cast<std::size_t>(ia - red.labels.begin()),
                                                  static_cast<std::size_t>(ib - red.labels.begin()));
    if (red.table.count(key)) rules.push_back(red.describe(key.first, key.second));
  }
  res.facts.emplace_back("residue_field", red.residue_modulus ? "F_" + std::to_string(red.residue_modulus) : "Q");
  res.facts.emplace_back("rank", std::to_string(red.labels.size()));
  res.facts.emplace_back("rules", join(rules, [](const std::string& s) { return s; }, "; "));
  if (red.labels.size() <= 4) {
    res.facts.emplace_back("table", join(red.describe(), [](const std::string& s) { return s; }, "; "));
  }
  res.facts.emplace_back("associative", yes(red.associative));
  const auto lines = red.describe();
  const std::size_t shown = std::min<std::size_t>(lines.size(), 64);
  res.lines.assign(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(shown));
  if (shown < lines.size()) res.lines.push_back("... " + std::to_string(lines.size() - shown) + " more entries");
  res.passed = red.associative;
  res.summary = "reduction over " + res.facts.front().second + " with " + std::to_string(red.labels.size()) +
                " basis elements" + (red.associative ? "" : ", not associative");
}

void check_valuation_axioms(const Context& c, CheckResult& res) {
  const auto pool = element_pool(c.red, 2, c.config.seed);
  const ValuationVerdict v = valuation_axioms_check(c.red, pool);
  res.facts.emplace_back("verdict", v.is_valuation ? "valuation" : "counterexample");
  res.facts.emplace_back("pool", std::to_string(pool.size()));
  res.facts.emplace_back("pairs", std::to_string(v.pairs_checked));
  if (v.counterexample) {
    const std::string w = "(" + c.pres.format(v.counterexample->first) + ", " +
                          c.pres.format(v.counterexample->second) + ")";
    res.facts.emplace_back("witness", w);
    res.facts.emplace_back("violated", v.violated);
    res.facts.emplace_back("values", v.value_a.to_string() + ", " + v.value_b.to_string() + " -> " +
                                         v.value_product.to_string());
    res.summary = v.violated + " law fails at " + w;
  } else {
    res.summary = "v_F is a valuation on " + std::to_string(pool.size()) + " pool elements";
  }
  const auto cert = domain_certificate(c.red);
  res.facts.emplace_back("domain_certificate", cert ? *cert : "none");
  res.passed = v.is_valuation;
}

void check_symbols(const Context& c, CheckResult& res) {
  const CheckOutcome o = graded_symbols_commute(c.red);
  res.facts.emplace_back("verdict", o.passed ? "commute" : "noncommuting");
  res.facts.emplace_back("pairs", std::to_string(o.cases));
  if (!o.passed) res.facts.emplace_back("witness", o.witness);
  res.passed = o.passed;
  res.summary = o.passed ? "G_F(Lambda) is commutative up to degree " + std::to_string(c.red.max_degree())
                         : "symbols of " + o.witness + " do not commute";
}

void check_crossed(const Context& c, CheckResult& res) {
  const CheckOutcome o = crossed_product_check(c.red, gamma_samples(c.red.field()));
  res.facts.emplace_back("verdict", yes(o.passed));
  res.facts.emplace_back("cases", std::to_string(o.cases));
  if (!o.passed) res.facts.emplace_back("witness", o.witness);
  res.passed = o.passed;
  res.summary = o.passed ? "G_v(A) is the twisted group ring of the reduction on the samples" : o.witness;
}

void check_strong(const Context& c, CheckResult& res) {
  const auto gs = gamma_samples(c.red.field());
  std::size_t pairs = 0;
  std::string witness;
  for (const auto& g : gs) {
    for (const auto& d : gs) {
      ++pairs;
      if (witness.empty() && !strong_filtration_check(c.red, g, d)) witness = g.to_string() + ", " + d.to_string();
    }
  }
  res.facts.emplace_back("verdict", yes(witness.empty()));
  res.facts.emplace_back("pairs", std::to_string(pairs));
  if (!witness.empty()) res.facts.emplace_back("witness", witness);
  res.passed = witness.empty();
  res.summary = res.passed ? "F^v is strong on " + std::to_string(pairs) + " (gamma, delta) pairs"
                           : "not strong at " + witness;
}

void check_lemma(const Context& c, CheckResult& res) {
  const CheckOutcome o = lemma_identities_check(c.red, 4, gamma_samples(c.red.field()));
  res.facts.emplace_back("verdict", yes(o.passed));
  res.facts.emplace_back("cases", std::to_string(o.cases));
  if (!o.passed) res.facts.emplace_back("witness", o.witness);
  res.passed = o.passed;
  res.summary = o.passed ? "both identities hold on " + std::to_string(o.cases) + " cases" : o.witness;
}

void check_connection(const Context& c, CheckResult& res) {
  const ConnectionVerdict v = connection_check(c.red);
  res.facts.emplace_back("filtered", flags(v.filtered));
  res.facts.emplace_back("graded", flags(v.graded));
  res.facts.emplace_back("rees", flags(v.rees));
  res.facts.emplace_back("torsion_free", flags(v.torsion_free));
  res.facts.emplace_back("agree", yes(v.agree));
  res.passed = v.passed;
  res.summary = v.passed ? "Lambda, G_F(Lambda) and the Rees pieces agree; G_F(Lambda) is torsion free"
                         : "verdicts disagree or torsion found";
}

void check_connected_graded(const Context& c, CheckResult& res) {
  const ConnectedGradedVerdict v = connected_graded_check(c.red);
  res.facts.emplace_back("verdict", yes(v.passed));
  res.facts.emplace_back("pieces_match", flags(v.pieces_match));
  res.facts.emplace_back("degree_one_residue_dim", std::to_string(v.degree_one_residue_dim));
  res.facts.emplace_back("dims_differ",
                         v.dims_differ.empty() ? "none" : join(v.dims_differ, [](int n) { return std::to_string(n); }));
  res.passed = v.passed;
  res.summary = v.passed ? "Lambda_n = Lambda meet R_n for every n" : "graded pieces differ";
}

void check_valuation_ring(const Context& c, CheckResult& res) {
  const ValuationRingVerdict v = valuation_ring_check(c.red);
  res.facts.emplace_back("verdict", yes(v.valuation_ring));
  res.facts.emplace_back("residue_field", yes(v.residue_is_field));
  res.facts.emplace_back("minimal_polynomial", v.minimal_polynomial);
  res.facts.emplace_back("consistent", yes(v.consistent));
  if (v.witness) res.facts.emplace_back("witness", c.pres.format(*v.witness));
  res.passed = v.valuation_ring && v.consistent;
  res.summary = std::string(v.valuation_ring ? "Lambda is a valuation ring" : "Lambda is not a valuation ring") +
                "; reduction k_v[T]/(" + v.minimal_polynomial + ")";
}

void check_subalgebra(const Context& c, CheckResult& res) {
  if (c.config.subalgebra.empty()) throw PreconditionError("subalgebra check needs [checks] subalgebra = ...");
  std::vector<AlgebraElement> gens;
  for (const auto& g : c.config.subalgebra) gens.push_back(c.pres.parse_element(g));
  const int n = std::min(4, c.red.max_degree());
  const SubReductor s = subalgebra_reductor(c.red, gens, n);
  res.facts.emplace_back("generators", join(c.config.subalgebra, [](const std::string& x) { return x; }));
  res.facts.emplace_back("dims", join(s.dims, [](std::size_t d) { return std::to_string(d); }));
  res.facts.emplace_back("ranks", join(s.layers, [](const Lattice& l) { return std::to_string(l.rank()); }));
  res.facts.emplace_back("unramified", flags(s.unramified));
  res.passed = all_true(s.unramified);
  res.summary = res.passed ? "Lambda meet A' is unramified up to degree " + std::to_string(n) : "ramified";
}

void check_tensor(const Context& c, CheckResult& res) {
  const int n = std::min(4, c.red.max_degree());
  const TensorReductor t = tensor_reductor(c.red, c.red, n);
  std::vector<std::size_t> dims;
  for (int m = 0; m <= n; ++m) {
    dims.push_back(t.reductor.graded() ? t.reductor.dim(m) - t.reductor.dim(m - 1) : t.reductor.dim(m));
  }
  res.facts.emplace_back("dims", join(dims, [](std::size_t d) { return std::to_string(d); }));
  res.facts.emplace_back("matches", yes(t.matches_tensor_filtration));
  res.facts.emplace_back("unramified", yes(t.unramified));
  res.passed = t.matches_tensor_filtration && t.unramified;
  res.summary = res.passed ? "Lambda (x) Lambda is an unramified reductor up to degree " + std::to_string(n)
                           : "tensor filtration mismatch or ramified";
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"unramified", check_unramified},        {"reduction", check_reduction},
      {"valuation_axioms", check_valuation_axioms}, {"symbols_commute", check_symbols},
      {"crossed", check_crossed},              {"strong", check_strong},
      {"lemma_identities", check_lemma},       {"connection", check_connection},
      {"connected_graded", check_connected_graded}, {"valuation_ring", check_valuation_ring},
      {"subalgebra", check_subalgebra},        {"tensor_square", check_tensor},
  };
  return table;
}

bool requested(const RunConfig& cfg, const std::string& name) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

template <class F>
CheckResult guarded(const std::string& name, F&& body) {
  CheckResult res;
  res.name = name;
  try {
    body(res);
  } catch (const std::exception& e) {
    res.passed = false;
    res.error = e.what();
    res.summary = std::string("error: ") + e.what();
  }
  return res;
}

void run_algebra(const RunConfig& cfg, Report& rep) {
  const Presentation pres = make_presentation(cfg);
  std::optional<Reductor> red;
  try {
    red.emplace(build_reductor(pres, cfg.max_degree));
    rep.facts.emplace_back("build.status", "ok");
  } catch (const Error& e) {
    rep.build_ok = false;
    rep.build_error = e.what();
    rep.facts.emplace_back("build.status", e.what());
  }
  if (red) {
    rep.layers = red->layers();
    auto col = [&](auto get) { return join(rep.layers, [&](const LayerInfo& l) { return std::to_string(get(l)); }); };
    rep.facts.emplace_back("layers.dims", col([](const LayerInfo& l) { return l.dim; }));
    rep.facts.emplace_back("layers.ranks", col([](const LayerInfo& l) { return l.rank; }));
    rep.facts.emplace_back("layers.residue_dims", col([](const LayerInfo& l) { return l.residue_dim; }));
    if (red->graded()) {
      std::vector<std::size_t> pieces;
      for (std::size_t i = 0; i < rep.layers.size(); ++i) {
        pieces.push_back(rep.layers[i].rank - (i ? rep.layers[i - 1].rank : 0));
      }
      rep.facts.emplace_back("layers.graded_ranks", join(pieces, [](std::size_t d) { return std::to_string(d); }));
    }
    rep.facts.emplace_back("layers.nested", yes(red->all_nested()));
  }

  for (const auto& info : check_registry()) {
    if (!requested(cfg, info.name)) continue;
    rep.checks.push_back(guarded(info.name, [&](CheckResult& res) {
      if (info.name == "confluence") {
        const auto overlaps = confluence_check(pres, cfg.max_degree);
        res.facts.emplace_back("unresolved", std::to_string(overlaps.size()));
        for (std::size_t i = 0; i < overlaps.size() && i < 8; ++i) {
          res.lines.push_back(pres.format(overlaps[i].word) + ": " + pres.format(overlaps[i].first) + " vs " +
                              pres.format(overlaps[i].second));
        }
        res.passed = overlaps.empty();
        res.summary = res.passed ? "all ambiguities resolve up to degree " + std::to_string(cfg.max_degree)
                                 : std::to_string(overlaps.size()) + " unresolved ambiguities";
        return;
      }
      if (info.name == "strategy") {
        const CheckOutcome o = strategy_independence_check(pres, std::min(4, cfg.max_degree));
        res.facts.emplace_back("words", std::to_string(o.cases));
        res.facts.emplace_back("discrepancies", o.passed ? "0" : "1");
        if (!o.passed) res.facts.emplace_back("witness", o.witness);
        res.passed = o.passed;
        res.summary = o.passed ? "leftmost and rightmost rewriting agree on " + std::to_string(o.cases) + " words"
                               : "strategies disagree on " + o.witness;
        return;
      }
      if (info.name == "membership") throw UnsupportedError("membership applies to lattice configs");
      if (!red) throw PreconditionError("not run: " + rep.build_error);
      handlers().at(info.name)(Context{cfg, pres, *red}, res);
    }));
  }
}

void run_lattice(const RunConfig& cfg, const ValuedField& field, Report& rep) {
  const Lattice m = make_lattice(cfg, field);
  rep.facts.emplace_back("build.status", "ok");
  for (const auto& info : check_registry()) {
    if (!requested(cfg, info.name)) continue;
    rep.checks.push_back(guarded(info.name, [&](CheckResult& res) {
      if (info.name == "unramified") {
        res.facts.emplace_back("ambient_dim", std::to_string(m.ambient_dim()));
        res.facts.emplace_back("span_dim", std::to_string(m.span_dim()));
        res.facts.emplace_back("residue_dim", std::to_string(residue_dim(m)));
        const bool u = is_unramified(m, m.ambient_dim());
        res.facts.emplace_back("verdict", yes(u));
        res.passed = u;
        res.summary = u ? "unramified" : "ramified: residue dimension " + std::to_string(residue_dim(m)) + " < " +
                                             std::to_string(m.ambient_dim());
        return;
      }
      if (info.name == "membership") {
        std::vector<bool> results;
        for (const auto& probe : cfg.lattice->probes) {
          Vector v;
          for (const auto& e : probe) v.push_back(field.parse(e));
          const bool in = member(v, m);
          results.push_back(in);
          res.lines.push_back("(" + join(probe, [](const std::string& s) { return s; }, ", ") + ") " +
                              (in ? "in M" : "not in M"));
        }
        res.facts.emplace_back("results", flags(results));
        res.passed = true;
        res.summary = std::to_string(results.size()) + " probes classified";
        return;
      }
      throw UnsupportedError(info.name + " needs an algebra presentation");
    }));
  }
}

}  // namespace

bool Report::passed() const {
  return build_ok && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::string> Report::fact(const std::string& key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return v;
  }
  for (const auto& c : checks) {
    for (const auto& [k, v] : c.facts) {
      if (c.name + "." + k == key) return v;
    }
    if (c.error && c.name + ".error" == key) return *c.error;
  }
  return std::nullopt;
}

Report run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.title = cfg.title;
  rep.max_degree = cfg.max_degree;
  rep.seed = cfg.seed;
  rep.input_digest = digest(cfg.source + "\n#max_degree=" + std::to_string(cfg.max_degree) +
                            "\n#seed=" + (cfg.seed ? std::to_string(*cfg.seed) : "none"));
  const ValuedField field = make_field(cfg);
  rep.field = field.describe();
  if (cfg.lattice) {
    run_lattice(cfg, field, rep);
  } else {
    run_algebra(cfg, rep);
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace valred::app
