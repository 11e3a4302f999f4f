#include "valred/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "valred/errors.hpp"
#include "valred/expr_parser.hpp"

namespace valred {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.degree = a.degree + b.degree;
  w.letters.reserve(a.size() + b.size());
  w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

// --- AlgebraElement -------------------------------------------------------

AlgebraElement AlgebraElement::scalar(const FieldElement& c) { return monomial(Word{}, c); }

AlgebraElement AlgebraElement::monomial(const Word& w, const FieldElement& c) {
  AlgebraElement a;
  a.add_term(w, c);
  return a;
}

int AlgebraElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree);
  return d;
}

FieldElement AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElement{} : it->second;
}

void AlgebraElement::add_term(const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  }
  return r;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }

// --- Presentation ---------------------------------------------------------

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  std::size_t i = 1;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  while (i < s.size() && s[i] == '\'') ++i;
  return i == s.size();
}

struct ElementParsePolicy {
  const Presentation& p;

  AlgebraElement number(const std::string& digits, std::size_t) const {
    return AlgebraElement::scalar(
        p.field().from_scalar(Scalar::parse(digits, p.field().base_modulus())));
  }
  AlgebraElement identifier(const std::string& name, std::size_t pos) const {
    if (int g = p.generator_index(name); g >= 0) return p.generator(static_cast<std::size_t>(g));
    if (auto it = p.constants().find(name); it != p.constants().end()) {
      return AlgebraElement::scalar(it->second);
    }
    const auto& vars = p.field().variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return AlgebraElement::scalar(p.field().variable(static_cast<int>(i)));
    }
    throw UnknownConstantError("unknown name '" + name + "' at position " + std::to_string(pos));
  }
  AlgebraElement divide(const AlgebraElement& a, const AlgebraElement& b, std::size_t pos) const {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    if (b.terms().size() != 1 || !b.terms().begin()->first.empty()) {
      throw ParseError("can only divide by a scalar", pos);
    }
    return a.scaled(b.terms().begin()->second.inverse());
  }
};

}  // namespace

Presentation::Presentation(ValuedField field, std::vector<std::string> generators,
                           std::vector<int> weights, std::map<std::string, FieldElement> constants,
                           std::vector<Rule> rules, FiltrationMode mode)
    : field_(std::move(field)),
      generators_(std::move(generators)),
      weights_(std::move(weights)),
      constants_(std::move(constants)),
      rules_(std::move(rules)),
      mode_(mode) {
  if (generators_.size() > 255) throw DomainError("at most 255 generators are supported");
  if (weights_.empty()) weights_.assign(generators_.size(), 1);
  if (weights_.size() != generators_.size()) {
    throw DomainError("expected " + std::to_string(generators_.size()) + " weights, got " +
                      std::to_string(weights_.size()));
  }
  std::set<std::string> names;
  for (const auto& v : field_.variables()) names.insert(v);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!valid_name(g)) throw DomainError("invalid generator name '" + g + "'");
    if (!names.insert(g).second) throw DomainError("name '" + g + "' is used twice");
    if (weights_[i] <= 0) throw DomainError("generator weights must be positive");
  }
  for (const auto& [name, value] : constants_) {
    if (!valid_name(name)) throw DomainError("invalid constant name '" + name + "'");
    if (!names.insert(name).second) throw DomainError("name '" + name + "' is used twice");
  }
  std::set<Word> lhs_seen;
  for (const auto& r : rules_) {
    if (r.lhs.size() < 2) throw DomainError("rule left-hand sides need length >= 2");
    for (auto l : r.lhs.letters) {
      if (l >= generators_.size()) throw DomainError("rule uses an unknown generator");
    }
    if (!lhs_seen.insert(r.lhs).second) {
      throw DomainError("two rules rewrite " + format(r.lhs));
    }
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!(w < r.lhs)) {
        throw NonTerminatingError("rule " + format(r.lhs) + " -> " + format(r.rhs) +
                                  " does not decrease: " + format(w) + " >= " + format(r.lhs));
      }
      if (mode_ == FiltrationMode::Graded && w.degree != r.lhs.degree) {
        throw PreconditionError("graded presentation needs homogeneous relations; " +
                                format(r.lhs) + " -> " + format(r.rhs));
      }
    }
  }
}

Word Presentation::make_word(std::span<const std::uint8_t> letters) const {
  Word w;
  w.letters.assign(letters.begin(), letters.end());
  for (auto l : letters) {
    if (l >= generators_.size()) throw DomainError("unknown generator index");
    w.degree += weights_[l];
  }
  return w;
}

Word Presentation::generator_word(std::size_t i) const {
  const std::uint8_t l = static_cast<std::uint8_t>(i);
  return make_word(std::span<const std::uint8_t>(&l, 1));
}

AlgebraElement Presentation::generator(std::size_t i) const {
  return AlgebraElement::monomial(generator_word(i), field_.one());
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

AlgebraElement Presentation::parse_element(std::string_view text) const {
  return parse_expression<AlgebraElement>(text, ElementParsePolicy{*this});
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += generators_[w.letters[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Presentation::format(const AlgebraElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    std::string coeff = field_.format(c);
    std::string term;
    if (w.empty()) {
      term = coeff;
    } else if (c.is_one()) {
      term = format(w);
    } else if ((-c).is_one()) {
      term = "-" + format(w);
    } else if (c.is_atomic()) {
      term = coeff + "*" + format(w);
    } else {
      term = "(" + coeff + ")*" + format(w);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Presentation parse_presentation(const PresentationSpec& spec) {
  std::map<std::string, FieldElement> constants;
  for (const auto& [name, text] : spec.constants) {
    if (constants.count(name)) throw DomainError("constant '" + name + "' defined twice");
    constants.emplace(name, spec.field.parse(text));
  }
  // Parse relation sides against a rule-free presentation with the same names.
  const Presentation names(spec.field, spec.generators, spec.weights, constants, {}, spec.mode);
  std::vector<Rule> rules;
  for (const auto& rel : spec.relations) {
    const std::size_t eq = rel.find('=');
    if (eq == std::string::npos) throw ParseError("relation needs '='", rel.size());
    if (rel.find('=', eq + 1) != std::string::npos) {
      throw ParseError("relation has more than one '='", rel.find('=', eq + 1));
    }
    const AlgebraElement lhs = names.parse_element(std::string_view(rel).substr(0, eq));
    AlgebraElement rhs;
    try {
      rhs = names.parse_element(std::string_view(rel).substr(eq + 1));
    } catch (const ParseError& e) {
      const std::string what = e.what();
      throw ParseError(what.substr(0, what.rfind(" at position ")), e.position() + eq + 1);
    }
    if (lhs.terms().size() != 1 || !lhs.terms().begin()->second.is_one() ||
        lhs.terms().begin()->first.size() < 2) {
      throw ParseError("left-hand side must be a single monomial word of length >= 2", 0);
    }
    rules.push_back(Rule{lhs.terms().begin()->first, rhs});
  }
  return Presentation(spec.field, spec.generators, spec.weights, std::move(constants),
                      std::move(rules), spec.mode);
}

Presentation trivial_presentation(const ValuedField& field) {
  return Presentation(field, {}, {}, {}, {}, FiltrationMode::Graded);
}

Presentation tensor_presentation(const Presentation& a, const Presentation& b) {
  if (!(a.field() == b.field())) throw DomainError("tensor factors must share the field");
  std::set<std::string> used(a.generators().begin(), a.generators().end());
  for (const auto& [name, c] : a.constants()) used.insert(name);
  for (const auto& v : a.field().variables()) used.insert(v);
  auto fresh = [&used](std::string name) {
    while (used.count(name)) name += "'";
    used.insert(name);
    return name;
  };

  std::vector<std::string> gens = a.generators();
  std::vector<int> weights = a.weights();
  for (std::size_t i = 0; i < b.num_generators(); ++i) {
    gens.push_back(fresh(b.generators()[i]));
    weights.push_back(b.weights()[i]);
  }
  std::map<std::string, FieldElement> constants = a.constants();
  for (const auto& [name, c] : b.constants()) constants.emplace(fresh(name), c);

  const auto shift = static_cast<std::uint8_t>(a.num_generators());
  auto shifted = [shift](const Word& w) {
    Word r = w;
    for (auto& l : r.letters) l = static_cast<std::uint8_t>(l + shift);
    return r;
  };

  std::vector<Rule> rules = a.rules();
  for (const auto& r : b.rules()) {
    AlgebraElement rhs;
    for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(shifted(w), c);
    rules.push_back(Rule{shifted(r.lhs), rhs});
  }
  for (std::size_t j = 0; j < b.num_generators(); ++j) {
    for (std::size_t i = 0; i < a.num_generators(); ++i) {
      const Word gi = a.generator_word(i);
      const Word gj = shifted(b.generator_word(j));
      rules.push_back(Rule{concat(gj, gi), AlgebraElement::monomial(concat(gi, gj), a.field().one())});
    }
  }
  const FiltrationMode mode =
      a.mode() == FiltrationMode::Graded && b.mode() == FiltrationMode::Graded
          ? FiltrationMode::Graded
          : FiltrationMode::Filtered;
  return Presentation(a.field(), std::move(gens), std::move(weights), std::move(constants),
                      std::move(rules), mode);
}

}  // namespace valred
