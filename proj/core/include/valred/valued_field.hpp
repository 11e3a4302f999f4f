#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "valred/field_element.hpp"
#include "valred/ordered_group.hpp"
#include "valred/scalar.hpp"

namespace valred {

enum class FieldKind { Rationals, RationalFunctions };

enum class ValuationKind {
  PAdic,        // Q with the p-adic valuation, Gamma = Z
  OrderAtX,     // k(X), order of vanishing at X = 0, Gamma = Z
  LexMonomial,  // k(X,Y), lex-minimal exponent (exp_X, exp_Y), Gamma = Z^2
};

/// Residues live in the prime field k_v = O_v / m_v.
using ResidueElement = Scalar;

/// A field K with a surjective valuation v : K -> Gamma u {inf}.
///
/// Three shapes are supported: (Q, p-adic), (k(X), order at X) and
/// (k(X,Y), lex monomial order) where k is Q or F_p. Uniformizers are
/// p, X, or (X, Y) with v(X) = (1,0) and v(Y) = (0,1). Descriptors are
/// small immutable values.
class ValuedField {
 public:
  /// Q with the p-adic valuation.
  static ValuedField rationals(std::uint32_t p);
  /// k(vars) over k = Q (base_modulus 0) or F_p; one variable gives the
  /// X-adic valuation, two give the lex monomial valuation.
  static ValuedField rational_functions(std::uint32_t base_modulus,
                                        std::vector<std::string> vars);

  FieldKind kind() const noexcept { return kind_; }
  ValuationKind valuation_kind() const noexcept { return valuation_; }
  /// The prime of a p-adic field; 0 otherwise.
  std::uint32_t prime() const noexcept { return prime_; }
  /// Characteristic of the coefficient field of K (0 for Q).
  std::uint32_t base_modulus() const noexcept { return base_; }
  /// Characteristic of the residue field k_v.
  std::uint32_t residue_modulus() const noexcept;
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  /// Rank of the value group.
  int rank() const noexcept { return valuation_ == ValuationKind::LexMonomial ? 2 : 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long n) const;
  FieldElement from_scalar(const Scalar& s) const;
  FieldElement variable(int index) const;

  /// Parses digits, variable names and + - * / ^ ( ).
  FieldElement parse(std::string_view text) const;
  std::string format(const FieldElement& x) const;

  GroupElement value(const FieldElement& x) const;
  /// x in f^v_gamma K, i.e. v(x) >= -gamma.
  bool in_field_filtration(const FieldElement& x, const GroupElement& gamma) const;
  bool is_integral(const FieldElement& x) const;

  /// Reduction O_v -> k_v; NotIntegralError when v(x) < 0.
  ResidueElement residue(const FieldElement& x) const;
  /// Section k_v -> O_v with residue(lift(r)) == r.
  FieldElement lift(const ResidueElement& r) const;

  /// Element t with v(t) = gamma, built from the stored uniformizers.
  FieldElement uniformizer_for(const GroupElement& gamma) const;
  /// Generator of m_v: the uniformizer of the smallest positive value.
  FieldElement maximal_ideal_generator() const;

  /// Deterministic coefficient pool for axiom checks:
  /// {0, 1, -1, p, 1/p, 2} or {0, 1, -1, X, 1/X, 1+X}.
  std::vector<FieldElement> coefficient_pool() const;

  /// Whether x is a square in K (Q and k(X) only).
  bool is_square(const FieldElement& x) const;

  /// e.g. "Q, 3-adic" or "F_5(X), X-adic".
  std::string describe() const;

  friend bool operator==(const ValuedField& a, const ValuedField& b);

 private:
  ValuedField() = default;
  void check_element(const FieldElement& x) const;

  FieldKind kind_ = FieldKind::Rationals;
  ValuationKind valuation_ = ValuationKind::PAdic;
  std::uint32_t prime_ = 0;
  std::uint32_t base_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace valred
