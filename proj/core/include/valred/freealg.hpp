#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valred/field_element.hpp"
#include "valred/valued_field.hpp"

namespace valred {

/// A word in the generators. Letters are generator indices, and generators
/// are indexed in precedence order, so comparing (degree, letters)
/// lexicographically is the degree-then-lex order used for rewriting.
struct Word {
  int degree = 0;
  std::vector<std::uint8_t> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

Word concat(const Word& a, const Word& b);

/// Finite linear combination of words with non-zero coefficients in K.
/// Normalized elements only contain irreducible words; products built with
/// operator* are raw concatenations that still need normal_form().
class AlgebraElement {
 public:
  using Terms = std::map<Word, FieldElement>;

  AlgebraElement() = default;
  static AlgebraElement scalar(const FieldElement& c);
  static AlgebraElement monomial(const Word& w, const FieldElement& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest word degree; -1 for zero.
  int degree() const;
  FieldElement coefficient(const Word& w) const;
  void add_term(const Word& w, const FieldElement& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  AlgebraElement scaled(const FieldElement& c) const;
  /// Raw concatenation product (no rewriting).
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

 private:
  Terms terms_;
};

enum class FiltrationMode { Filtered, Graded };

/// Oriented rewrite rule lhs -> rhs.
struct Rule {
  Word lhs;
  AlgebraElement rhs;
};

/// Relation strings plus generator table, as read from a config.
struct PresentationSpec {
  ValuedField field = ValuedField::rationals(2);
  /// Generator names in precedence order, lowest first. Lower-precedence
  /// generators end up on the left of normal words.
  std::vector<std::string> generators;
  /// Positive weights; empty means all 1.
  std::vector<int> weights;
  std::vector<std::pair<std::string, std::string>> constants;
  /// "lhs = rhs" with lhs a single monomial word of length >= 2.
  std::vector<std::string> relations;
  FiltrationMode mode = FiltrationMode::Filtered;
};

/// A presented algebra K<X>/(rules) with a rewriting system that is
/// terminating under degree-then-lex order.
class Presentation {
 public:
  /// Validates names, weights and termination (every rhs word is smaller
  /// than its lhs); in graded mode rules must also be homogeneous.
  Presentation(ValuedField field, std::vector<std::string> generators, std::vector<int> weights,
               std::map<std::string, FieldElement> constants, std::vector<Rule> rules,
               FiltrationMode mode);

  const ValuedField& field() const noexcept { return field_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const std::map<std::string, FieldElement>& constants() const noexcept { return constants_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  FiltrationMode mode() const noexcept { return mode_; }
  std::size_t num_generators() const noexcept { return generators_.size(); }

  Word make_word(std::span<const std::uint8_t> letters) const;
  Word generator_word(std::size_t i) const;
  AlgebraElement generator(std::size_t i) const;
  AlgebraElement scalar(const FieldElement& c) const { return AlgebraElement::scalar(c); }
  int generator_index(std::string_view name) const;

  /// Parses an element; the result is raw (not in normal form).
  AlgebraElement parse_element(std::string_view text) const;

  /// "X*D^2"; the empty word is "1".
  std::string format(const Word& w) const;
  /// "X*D^2 + D", leading term first.
  std::string format(const AlgebraElement& a) const;

 private:
  ValuedField field_;
  std::vector<std::string> generators_;
  std::vector<int> weights_;
  std::map<std::string, FieldElement> constants_;
  std::vector<Rule> rules_;
  FiltrationMode mode_;
};

/// Builds a presentation from relation strings. Throws ParseError,
/// NonTerminatingError or UnknownConstantError.
Presentation parse_presentation(const PresentationSpec& spec);

/// K itself: no generators, no relations.
Presentation trivial_presentation(const ValuedField& field);

enum class Strategy { Leftmost, Rightmost };

inline constexpr std::size_t kDefaultStepLimit = 1'000'000;

/// Rewrites until no rule applies. Words are processed largest first and
/// each word is rewritten at its leftmost (or rightmost) redex.
/// StepLimitError when more than step_limit rewrites are needed.
AlgebraElement normal_form(const Presentation& p, const AlgebraElement& raw,
                           Strategy strategy = Strategy::Leftmost,
                           std::size_t step_limit = kDefaultStepLimit);

bool is_irreducible(const Presentation& p, const Word& w);

/// Irreducible words of degree <= n (filtered) or == n (graded), sorted.
std::vector<Word> filtration_basis(const Presentation& p, int n);

/// Every word of degree exactly n, reducible or not, sorted.
std::vector<Word> words_of_degree(const Presentation& p, int n);

AlgebraElement multiply(const Presentation& p, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);

/// An ambiguity whose two one-step reductions have different normal forms.
struct Overlap {
  Word word;
  AlgebraElement first;
  AlgebraElement second;
};

/// Overlap and inclusion ambiguities of degree <= n that fail to resolve.
std::vector<Overlap> confluence_check(const Presentation& p, int n);

/// Presentation of the tensor product: generators of `b` follow those of
/// `a` in precedence (renamed with a trailing ' on clashes) and every
/// b-generator commutes past every a-generator.
Presentation tensor_presentation(const Presentation& a, const Presentation& b);

}  // namespace valred
