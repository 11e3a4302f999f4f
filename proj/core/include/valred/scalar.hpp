#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace valred {

/// Element of a prime field: Q when modulus() == 0, otherwise F_p.
///
/// F_p elements are stored as their least non-negative residue. A
/// default-constructed Scalar is the zero of Q; a Q-zero adopts the
/// modulus of the other operand in mixed arithmetic so that accumulators
/// can start from Scalar{}. Any other modulus mismatch throws DomainError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, std::uint32_t modulus = 0);  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value, std::uint32_t modulus);
  /// Parses an integer or a fraction "a/b".
  static Scalar parse(const std::string& text, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return mod_; }
  const mpq_class& value() const noexcept { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Scalar inverse() const;
  Scalar pow(long e) const;
  /// True iff this is a square in its prime field.
  bool is_square() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "-3/4" over Q, "0".."p-1" over F_p.
  std::string to_string() const;

 private:
  void adopt(const Scalar& other);
  void reduce();

  mpq_class q_;
  std::uint32_t mod_ = 0;
};

}  // namespace valred
