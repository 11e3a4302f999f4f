#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "valred/poly.hpp"
#include "valred/scalar.hpp"

namespace valred {

/// Exact element of K: a prime-field scalar (Q or F_p) when nvars() == 0,
/// otherwise a reduced fraction of polynomials in one or two variables.
///
/// Fractions are kept in canonical form: gcd(num, den) = 1 and the
/// lex-leading coefficient of the denominator is 1. Equality is therefore
/// structural. The default value is the zero of Q and adopts the ring of
/// the other operand, like Scalar{}.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Scalar& c, int nvars = 0);  // NOLINT(google-explicit-constructor)
  FieldElement(const Poly& num, const Poly& den);

  int nvars() const noexcept { return nvars_; }
  std::uint32_t modulus() const noexcept { return nvars_ == 0 ? c_.modulus() : num_.modulus(); }
  bool is_zero() const { return nvars_ == 0 ? c_.is_zero() : num_.is_zero(); }
  bool is_one() const;

  /// The scalar value; only for nvars() == 0.
  const Scalar& scalar() const;
  /// Numerator and denominator; only meaningful when nvars() > 0.
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical text using the given variable names.
  std::string to_string(std::span<const std::string> names = {}) const;
  /// True when to_string() is a single product/quotient that needs no
  /// parentheses as a coefficient.
  bool is_atomic() const;

 private:
  void adopt(const FieldElement& o);
  void normalize();

  int nvars_ = 0;
  Scalar c_;
  Poly num_;
  Poly den_;
};

}  // namespace valred
