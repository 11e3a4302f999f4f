#include "valred/scalar.hpp"

#include "valred/errors.hpp"

namespace valred {

Scalar::Scalar(long value, std::uint32_t modulus) : q_(value), mod_(modulus) { reduce(); }

Scalar::Scalar(const mpq_class& value, std::uint32_t modulus) : q_(value), mod_(modulus) {
  q_.canonicalize();
  reduce();
}

Scalar Scalar::parse(const std::string& text, std::uint32_t modulus) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a number: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  return Scalar(q, modulus);
}

void Scalar::reduce() {
  if (mod_ == 0) return;
  const mpz_class p(static_cast<unsigned long>(mod_));
  mpz_class num = q_.get_num() % p;
  mpz_class den = q_.get_den() % p;
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(mod_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  num = (num * inv) % p;
  if (num < 0) num += p;
  q_ = mpq_class(num);
}

void Scalar::adopt(const Scalar& other) {
  if (mod_ == other.mod_) return;
  if (mod_ == 0 && is_zero()) {
    mod_ = other.mod_;
    return;
  }
  if (other.mod_ == 0 && other.is_zero()) return;
  throw DomainError("mixing scalars of characteristic " + std::to_string(mod_) + " and " +
                    std::to_string(other.mod_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(o);
  q_ += o.q_;
  if (mod_ != 0 && q_ >= mod_) q_ -= mod_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt(o);
  q_ -= o.q_;
  if (mod_ != 0 && q_ < 0) q_ += mod_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt(o);
  q_ *= o.q_;
  if (mod_ != 0) {
    mpz_class n = q_.get_num() % mod_;
    q_ = mpq_class(n);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  adopt(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  if (mod_ != 0 && r.q_ < 0) r.q_ += mod_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (mod_ == 0) return Scalar(1 / q_, 0);
  const mpz_class p(static_cast<unsigned long>(mod_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), q_.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), mod_);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(1, mod_);
  while (n) {
    if (n & 1U) r *= base;
    base *= base;
    n >>= 1U;
  }
  return r;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  if (mod_ == 0) {
    return sgn(q_) > 0 && mpz_perfect_square_p(q_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q_.get_den().get_mpz_t()) != 0;
  }
  if (mod_ == 2) return true;
  return pow(static_cast<long>((mod_ - 1) / 2)).is_one();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    // A Q-zero compares equal to the zero of any prime field.
    return a.is_zero() && b.is_zero() && (a.mod_ == 0 || b.mod_ == 0);
  }
  return a.q_ == b.q_;
}

std::string Scalar::to_string() const { return q_.get_str(); }

}  // namespace valred
