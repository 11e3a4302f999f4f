#include "valred/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "valred/errors.hpp"

namespace valred::app {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const auto piece = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!piece.empty()) out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& text, std::size_t line, const std::string& field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("expected an integer, got '" + text + "'", line, field);
  }
  return value;
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"meta", {"title"}},
      {"field", {"kind", "base", "vars", "p"}},
      {"valuation", {"kind"}},
      {"constants", {}},
      {"algebra", {"generators", "weights", "relation", "filtration"}},
      {"lattice", {"dim", "summand", "generator", "probe"}},
      {"checks", {"run", "max_degree", "seed", "format", "subalgebra"}},
  };
  return keys;
}

}  // namespace

Cut parse_cut(const std::string& text) {
  const std::string t = trim(text);
  auto inner = [&](std::string_view prefix) -> std::optional<std::string> {
    if (t.rfind(prefix, 0) != 0 || t.size() < prefix.size() + 2 || t[prefix.size()] != '(' ||
        t.back() != ')') {
      return std::nullopt;
    }
    return t.substr(prefix.size() + 1, t.size() - prefix.size() - 2);
  };
  if (auto g = inner("Principal")) return Cut::principal(GroupElement::parse(*g));
  if (auto c = inner("Limit")) return Cut::limit(std::stoll(*c));
  throw ParseError("expected Principal(gamma) or Limit(c) in '" + t + "'", 0);
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  cfg.source = std::string(text);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string section;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> lines;  // "section.key" -> first line
  bool saw_field = false;
  bool saw_algebra = false;
  bool saw_checks = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '#' && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = trim(std::string_view(line).substr(0, i));
        break;
      }
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no, {});
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!known_keys().count(section)) throw ConfigError("unknown section", line_no, section);
      saw_field = saw_field || section == "field";
      saw_algebra = saw_algebra || section == "algebra";
      saw_checks = saw_checks || section == "checks";
      if (section == "lattice" && !cfg.lattice) cfg.lattice = LatticeConfig{};
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line_no, section);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (section.empty()) throw ConfigError("key outside of any section", line_no, key);
    const std::string field = section + "." + key;
    const auto& allowed = known_keys().at(section);
    if (section != "constants" && std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key", line_no, field);
    }
    lines.emplace(field, line_no);

    if (section == "meta") {
      cfg.title = value;
    } else if (section == "field") {
      if (key == "kind") {
        if (value != "rationals" && value != "rational_functions") {
          throw ConfigError("kind must be rationals or rational_functions", line_no, field);
        }
        cfg.field.kind = value;
      } else if (key == "base") {
        cfg.field.base = value;
      } else if (key == "vars") {
        cfg.field.vars = split_list(value);
      } else {
        cfg.field.p = parse_number<std::uint32_t>(value, line_no, field);
      }
    } else if (section == "valuation") {
      if (value != "p-adic" && value != "order-at-X" && value != "lex-monomial") {
        throw ConfigError("kind must be p-adic, order-at-X or lex-monomial", line_no, field);
      }
      cfg.field.valuation = value;
    } else if (section == "constants") {
      cfg.constants.emplace_back(key, value);
    } else if (section == "algebra") {
      if (key == "generators") {
        cfg.generators = split_list(value);
      } else if (key == "weights") {
        cfg.weights.clear();
        for (const auto& w : split_list(value)) cfg.weights.push_back(parse_number<int>(w, line_no, field));
      } else if (key == "relation") {
        cfg.relations.push_back(value);
      } else {
        if (value != "filtered" && value != "graded") {
          throw ConfigError("filtration must be filtered or graded", line_no, field);
        }
        cfg.mode = value == "graded" ? FiltrationMode::Graded : FiltrationMode::Filtered;
      }
    } else if (section == "lattice") {
      if (key == "dim") {
        cfg.lattice->dim = parse_number<std::size_t>(value, line_no, field);
      } else if (key == "summand") {
        const auto colon = value.find(':');
        if (colon == std::string::npos) throw ConfigError("expected 'Cut : direction'", line_no, field);
        cfg.lattice->summands.emplace_back(trim(std::string_view(value).substr(0, colon)),
                                           split_list(std::string_view(value).substr(colon + 1)));
      } else if (key == "generator") {
        cfg.lattice->generators.push_back(split_list(value));
      } else {
        cfg.lattice->probes.push_back(split_list(value));
      }
    } else if (section == "checks") {
      if (key == "run") {
        cfg.checks = split_list(value);
        for (const auto& c : cfg.checks) {
          try {
            find_check(c);
          } catch (const UnknownCheckError& e) {
            throw ConfigError(e.what(), line_no, field);
          }
        }
      } else if (key == "max_degree") {
        cfg.max_degree = parse_number<int>(value, line_no, field);
        if (cfg.max_degree < 0) throw ConfigError("max_degree must be >= 0", line_no, field);
      } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value, line_no, field);
      } else if (key == "format") {
        if (value != "text" && value != "json") throw ConfigError("format must be text or json", line_no, field);
        cfg.format = value;
      } else {
        cfg.subalgebra = split_list(value);
      }
    }
  }

  auto line_of = [&](const std::string& field) {
    auto it = lines.find(field);
    return it == lines.end() ? line_no : it->second;
  };
  if (!saw_field) throw ConfigError("missing [field] section", line_no, "field");
  if (!saw_algebra && !cfg.lattice) throw ConfigError("missing [algebra] or [lattice] section", line_no, "algebra");
  if (!saw_checks || cfg.checks.empty()) throw ConfigError("checks list is empty", line_of("checks.run"), "checks.run");

  ValuedField field = ValuedField::rationals(2);
  try {
    field = make_field(cfg);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what(), line_of("field.kind"), "field");
  }
  try {
    if (cfg.lattice) {
      make_lattice(cfg, field);
    } else {
      make_presentation(cfg);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    const std::string where = cfg.lattice ? "lattice" : "algebra.relation";
    throw ConfigError(e.what(), line_of(cfg.lattice ? "lattice.dim" : "algebra.relation"), where);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path, 0, {});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ValuedField make_field(const RunConfig& config) {
  const FieldConfig& f = config.field;
  if (f.kind == "rationals") {
    if (f.p == 0) throw ConfigError("rationals need a prime p", 0, "field.p");
    if (!f.valuation.empty() && f.valuation != "p-adic") {
      throw ConfigError("Q carries the p-adic valuation", 0, "valuation.kind");
    }
    return ValuedField::rationals(f.p);
  }
  std::uint32_t base = 0;
  if (f.base != "Q") {
    if (f.base.rfind("F_", 0) != 0) throw ConfigError("base must be Q or F_p", 0, "field.base");
    base = static_cast<std::uint32_t>(std::stoul(f.base.substr(2)));
  }
  const std::string expected = f.vars.size() == 2 ? "lex-monomial" : "order-at-X";
  if (!f.valuation.empty() && f.valuation != expected) {
    throw ConfigError("valuation must be " + expected + " for " + std::to_string(f.vars.size()) +
                          " variable(s)",
                      0, "valuation.kind");
  }
  return ValuedField::rational_functions(base, f.vars);
}

Presentation make_presentation(const RunConfig& config) {
  PresentationSpec spec;
  spec.field = make_field(config);
  spec.generators = config.generators;
  spec.weights = config.weights;
  spec.constants = config.constants;
  spec.relations = config.relations;
  spec.mode = config.mode;
  return parse_presentation(spec);
}

Lattice make_lattice(const RunConfig& config, const ValuedField& field) {
  const LatticeConfig& l = *config.lattice;
  auto vec = [&](const std::vector<std::string>& entries) {
    if (entries.size() != l.dim) throw DimensionError("vector length does not match lattice dim");
    Vector v;
    for (const auto& e : entries) v.push_back(field.parse(e));
    return v;
  };
  if (!l.summands.empty()) {
    std::vector<std::pair<Cut, Vector>> summands;
    for (const auto& [cut, dir] : l.summands) summands.emplace_back(parse_cut(cut), vec(dir));
    return Lattice::ideal_sum(field, l.dim, std::move(summands), "K^" + std::to_string(l.dim));
  }
  std::vector<Vector> gens;
  for (const auto& g : l.generators) gens.push_back(vec(g));
  return Lattice::finitely_generated(field, l.dim, std::move(gens), "K^" + std::to_string(l.dim));
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry{
      {"confluence", "Every overlap and inclusion ambiguity of the rewriting rules up to the degree bound resolves to one normal form.",
       "has a finite $PBW$-basis"},
      {"strategy", "Leftmost and rightmost rewriting give the same normal form on every word of degree <= min(N, 4).",
       "has a finite $PBW$-basis"},
      {"unramified", "Each F_n Lambda is an O_v-lattice in F_nA with dim_k (F_n Lambda / m_v F_n Lambda) = dim_K F_nA; for graded presentations also Lambda meet R_n in R_n.",
       "unramified reduction of $F_nA$ for all"},
      {"reduction", "Structure constants of Lambda / m_v Lambda over k_v on Lambda's basis, with an associativity check up to the degree bound.",
       "{\\em reduction} of $A$ with respect to ${\\Lambda}$"},
      {"valuation_axioms", "v_F(ab) = v_F(a) + v_F(b) and v_F(a+b) >= min(v_F(a), v_F(b)) on every pair of the deterministic element pool.",
       "whenever $G_F(R)$ is a domain"},
      {"symbols_commute", "Commutators of basis elements drop filtration degree, so G_F(Lambda) is commutative.",
       "$G_F({\\Lambda})=O_v[X_1,\\ldots,X_n]$"},
      {"crossed", "Multiplication by sigma(t_gamma) maps G_v(A)_gamma bijectively onto G_v(A)_0 and homogeneous products transport to the reduction.",
       "the twisted group ring $\\overline{A}*{\\Gamma}$"},
      {"strong", "F^v_gamma A * F^v_delta A = F^v_{gamma+delta} A for gamma, delta in the sample range.",
       "is ${\\Gamma}$-separated and strong"},
      {"lemma_identities", "m_v F_j Lambda meet F_i Lambda = m_v F_i Lambda and (f^v_gamma K) Lambda meet F_nA = (f^v_gamma K)(Lambda meet F_nA).",
       "Let ${\\Lambda}$ be an $F$-reductor"},
      {"connection", "Lambda unramified, G_F(Lambda) unramified in G_F(A) and the Rees pieces unramified agree degree by degree; each G_F(Lambda)_n is torsion free.",
       "are unramified graded reductors"},
      {"connected_graded", "For connected graded A, Lambda_n = Lambda meet R_n and the degree one reduction has dimension dim_K R_1.",
       "Then $F^vR$ is ${\\Gamma}$-separated"},
      {"valuation_ring", "For A = K or a quadratic field extension, Lambda is a valuation ring iff its reduction is a field; cross-checked on the element pool.",
       "if and only if $\\overline{{\\Lambda}}$ is a skewfield"},
      {"subalgebra", "Lambda' = Lambda meet A' for the subalgebra generated by the listed elements is an unramified reductor of A'.",
       "is an unramified $F$-reductor of $A'$"},
      {"tensor_square", "The reductor of A (x) A equals the tensor filtration of Lambda (x) Lambda and is unramified.",
       "with respect to the tensor filtration"},
      {"membership", "Lattice residue dimension, unramifiedness and membership of the probe vectors.",
       "unramified reduction of $F_nA$ for all"},
  };
  return registry;
}

const CheckInfo& find_check(std::string_view name) {
  for (const auto& c : check_registry()) {
    if (c.name == name) return c;
  }
  throw UnknownCheckError("unknown check '" + std::string(name) + "'");
}

std::string explain(std::string_view name) {
  const CheckInfo& c = find_check(name);
  return c.name + ": " + c.definition + "\nAnchor: \"" + c.anchor + "\"\n";
}

}  // namespace valred::app
