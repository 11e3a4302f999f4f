#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "valred/scalar.hpp"

namespace valred {

/// Sparse polynomial in one or two variables over a prime field.
///
/// Terms are keyed by exponent vectors in lexicographic order, so
/// terms().begin() is the lex-minimal monomial and rbegin() the lex-maximal
/// one. Unused exponent slots are zero.
class Poly {
 public:
  using Exponent = std::array<int, 2>;
  using Terms = std::map<Exponent, Scalar>;

  Poly() = default;
  Poly(int nvars, std::uint32_t modulus);
  static Poly constant(const Scalar& c, int nvars);
  static Poly monomial(const Scalar& c, const Exponent& e, int nvars);
  static Poly variable(int index, int nvars, std::uint32_t modulus);

  int nvars() const noexcept { return nvars_; }
  std::uint32_t modulus() const noexcept { return mod_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;
  /// Lex-minimal term; precondition: non-zero.
  const Terms::value_type& lowest() const { return *terms_.begin(); }
  /// Lex-maximal term; precondition: non-zero.
  const Terms::value_type& leading() const { return *terms_.rbegin(); }
  int degree(int var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  /// Multiplies by the monomial x^e (e may have negative entries when the
  /// result stays polynomial).
  Poly shifted(const Exponent& e) const;
  Poly pow(unsigned e) const;

  /// Exact quotient; DomainError if the division leaves a remainder.
  Poly divide_exact(const Poly& d) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Terms in descending lex order, e.g. "X^2*Y + 3*Y - 1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  void adopt(const Poly& o);
  void add_term(const Exponent& e, const Scalar& c);

  Terms terms_;
  int nvars_ = 0;
  std::uint32_t mod_ = 0;
};

/// Greatest common divisor, normalized so the lex-leading coefficient is 1.
/// gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace valred
