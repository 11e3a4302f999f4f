#include "valred/field_element.hpp"

#include "valred/errors.hpp"

namespace valred {

FieldElement::FieldElement(const Scalar& c, int nvars) : nvars_(nvars) {
  if (nvars == 0) {
    c_ = c;
  } else {
    num_ = Poly::constant(c, nvars);
    if (num_.is_zero()) num_ = Poly(nvars, c.modulus());
    den_ = Poly::constant(Scalar(1, c.modulus()), nvars);
  }
}

FieldElement::FieldElement(const Poly& num, const Poly& den)
    : nvars_(std::max(num.nvars(), den.nvars())), num_(num), den_(den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (nvars_ == 0) {
    c_ = num.constant_term() / den.constant_term();
    num_ = Poly();
    den_ = Poly();
    return;
  }
  normalize();
}

bool FieldElement::is_one() const {
  if (nvars_ == 0) return c_.is_one();
  return num_ == den_;
}

const Scalar& FieldElement::scalar() const {
  if (nvars_ != 0) throw DomainError("element of a function field is not a scalar");
  return c_;
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Scalar(1, num_.modulus()), nvars_);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  const Scalar inv = den_.leading().second.inverse();
  if (!inv.is_one()) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

void FieldElement::adopt(const FieldElement& o) {
  if (nvars_ == o.nvars_) {
    if (nvars_ == 0) return;  // Scalar handles characteristic mismatch
    if (num_.modulus() != o.num_.modulus()) {
      throw DomainError("mixing elements of different fields");
    }
    return;
  }
  if (nvars_ == 0 && c_.is_zero() && c_.modulus() == 0) {
    *this = FieldElement(Scalar(0, o.modulus()), o.nvars_);
    return;
  }
  if (o.nvars_ == 0 && o.c_.is_zero() && o.c_.modulus() == 0) return;
  throw DomainError("mixing elements of different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.is_zero() && o.nvars_ == 0 && o.modulus() == 0) return *this;
  adopt(o);
  if (nvars_ == 0) {
    c_ += o.c_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  adopt(o);
  if (nvars_ == 0) {
    c_ *= o.c_;
    return *this;
  }
  if (o.nvars_ == 0) {
    // o is an untyped zero
    *this = FieldElement(Scalar(0, modulus()), nvars_);
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (nvars_ == 0) {
    r.c_ = -c_;
  } else {
    r.num_ = -num_;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (nvars_ == 0) return FieldElement(c_.inverse());
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (nvars_ == 0) return FieldElement(c_.pow(e));
  FieldElement r(Scalar(1, modulus()), nvars_);
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.nvars_ != b.nvars_) return a.is_zero() && b.is_zero();
  if (a.nvars_ == 0) return a.c_ == b.c_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool FieldElement::is_atomic() const {
  if (nvars_ == 0) return true;
  return num_.terms().size() <= 1 && den_.terms().size() <= 1;
}

std::string FieldElement::to_string(std::span<const std::string> names) const {
  if (nvars_ == 0) {
    if (c_.modulus() != 0 && c_.value() > c_.modulus() / 2) return "-" + (-c_).to_string();
    return c_.to_string();
  }
  std::string n = num_.to_string(names);
  if (den_.is_constant()) return n;
  std::string d = den_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace valred
