#include "valred/valued_field.hpp"

#include <optional>

#include "valred/errors.hpp"
#include "valred/expr_parser.hpp"

namespace valred {

namespace {

bool is_prime(std::uint32_t n) {
  const mpz_class z(static_cast<unsigned long>(n));
  return n >= 2 && mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::optional<Scalar> scalar_sqrt(const Scalar& s) {
  if (s.is_zero()) return s;
  if (s.modulus() == 0) {
    if (!s.is_square()) return std::nullopt;
    mpz_class n;
    mpz_class d;
    mpz_sqrt(n.get_mpz_t(), s.value().get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), s.value().get_den().get_mpz_t());
    return Scalar(mpq_class(n, d), 0);
  }
  for (std::uint32_t r = 1; r < s.modulus(); ++r) {
    Scalar c(static_cast<long>(r), s.modulus());
    if (c * c == s) return c;
  }
  return std::nullopt;
}

// Square root of a univariate polynomial in characteristic != 2, by
// solving for coefficients from the top down.
std::optional<Poly> poly_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  const int d = f.degree(0);
  if (d % 2 != 0) return std::nullopt;
  const int m = d / 2;
  auto coeff = [&f](int i) {
    auto it = f.terms().find(Poly::Exponent{i, 0});
    return it == f.terms().end() ? Scalar(0, f.modulus()) : it->second;
  };
  auto lead = scalar_sqrt(coeff(d));
  if (!lead) return std::nullopt;
  std::vector<Scalar> g(static_cast<std::size_t>(m + 1), Scalar(0, f.modulus()));
  g[static_cast<std::size_t>(m)] = *lead;
  const Scalar two_lead = *lead * Scalar(2, f.modulus());
  for (int k = m - 1; k >= 0; --k) {
    Scalar rest = coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) rest -= g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    }
    g[static_cast<std::size_t>(k)] = rest / two_lead;
  }
  Poly root(1, f.modulus());
  for (int i = 0; i <= m; ++i) root += Poly::monomial(g[static_cast<std::size_t>(i)], {i, 0}, 1);
  if (!(root * root == f)) return std::nullopt;
  return root;
}

struct FieldParsePolicy {
  const ValuedField& field;

  FieldElement number(const std::string& digits, std::size_t) const {
    return field.from_scalar(Scalar::parse(digits, field.base_modulus()));
  }
  FieldElement identifier(const std::string& name, std::size_t pos) const {
    for (int i = 0; i < field.nvars(); ++i) {
      if (field.variables()[static_cast<std::size_t>(i)] == name) return field.variable(i);
    }
    throw ParseError("unknown name '" + name + "'", pos);
  }
  FieldElement divide(const FieldElement& a, const FieldElement& b, std::size_t pos) const {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }
};

}  // namespace

ValuedField ValuedField::rationals(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("p-adic valuation needs a prime, got " + std::to_string(p));
  ValuedField f;
  f.kind_ = FieldKind::Rationals;
  f.valuation_ = ValuationKind::PAdic;
  f.prime_ = p;
  return f;
}

ValuedField ValuedField::rational_functions(std::uint32_t base_modulus,
                                            std::vector<std::string> vars) {
  if (base_modulus != 0 && !is_prime(base_modulus)) {
    throw DomainError("base field F_q needs q prime, got " + std::to_string(base_modulus));
  }
  if (vars.empty() || vars.size() > 2) {
    throw DimensionError("rational function fields have one or two variables");
  }
  if (vars.size() == 2 && vars[0] == vars[1]) throw DomainError("duplicate variable name");
  ValuedField f;
  f.kind_ = FieldKind::RationalFunctions;
  f.valuation_ = vars.size() == 1 ? ValuationKind::OrderAtX : ValuationKind::LexMonomial;
  f.base_ = base_modulus;
  f.vars_ = std::move(vars);
  return f;
}

std::uint32_t ValuedField::residue_modulus() const noexcept {
  return valuation_ == ValuationKind::PAdic ? prime_ : base_;
}

FieldElement ValuedField::zero() const { return from_int(0); }
FieldElement ValuedField::one() const { return from_int(1); }
FieldElement ValuedField::from_int(long n) const { return from_scalar(Scalar(n, base_)); }

FieldElement ValuedField::from_scalar(const Scalar& s) const {
  if (s.modulus() != base_ && !(s.is_zero() && s.modulus() == 0)) {
    throw DomainError("scalar of characteristic " + std::to_string(s.modulus()) +
                      " is not in " + describe());
  }
  return FieldElement(Scalar(s.value(), base_), nvars());
}

FieldElement ValuedField::variable(int index) const {
  if (index < 0 || index >= nvars()) throw DomainError("no such variable");
  return FieldElement(Poly::variable(index, nvars(), base_),
                      Poly::constant(Scalar(1, base_), nvars()));
}

FieldElement ValuedField::parse(std::string_view text) const {
  return parse_expression<FieldElement>(text, FieldParsePolicy{*this});
}

std::string ValuedField::format(const FieldElement& x) const { return x.to_string(vars_); }

void ValuedField::check_element(const FieldElement& x) const {
  if (x.is_zero()) return;
  if (x.nvars() != nvars() || x.modulus() != base_) {
    throw DomainError("element is not in " + describe());
  }
}

GroupElement ValuedField::value(const FieldElement& x) const {
  check_element(x);
  if (x.is_zero()) return GroupElement::infinity();
  if (valuation_ == ValuationKind::PAdic) {
    const mpz_class p(static_cast<unsigned long>(prime_));
    mpz_class rest;
    const auto vn = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), x.scalar().value().get_num().get_mpz_t(), p.get_mpz_t()));
    const auto vd = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), x.scalar().value().get_den().get_mpz_t(), p.get_mpz_t()));
    return GroupElement{vn - vd};
  }
  const auto& n = x.numerator().lowest().first;
  const auto& d = x.denominator().lowest().first;
  if (valuation_ == ValuationKind::OrderAtX) return GroupElement{n[0] - d[0]};
  return GroupElement{n[0] - d[0], n[1] - d[1]};
}

bool ValuedField::in_field_filtration(const FieldElement& x, const GroupElement& gamma) const {
  return value(x) >= neg(gamma);
}

bool ValuedField::is_integral(const FieldElement& x) const {
  return value(x) >= GroupElement::zero(rank());
}

ResidueElement ValuedField::residue(const FieldElement& x) const {
  const GroupElement v = value(x);
  const GroupElement zero = GroupElement::zero(rank());
  if (v < zero) {
    throw NotIntegralError(format(x) + " has negative value " + v.to_string());
  }
  if (v > zero) return Scalar(0, residue_modulus());
  if (valuation_ == ValuationKind::PAdic) return Scalar(x.scalar().value(), prime_);
  return x.numerator().lowest().second / x.denominator().lowest().second;
}

FieldElement ValuedField::lift(const ResidueElement& r) const {
  if (r.modulus() != residue_modulus() && !(r.is_zero() && r.modulus() == 0)) {
    throw DomainError("residue is not in the residue field of " + describe());
  }
  if (valuation_ == ValuationKind::PAdic) return FieldElement(Scalar(r.value(), 0));
  return from_scalar(Scalar(r.value(), base_));
}

FieldElement ValuedField::uniformizer_for(const GroupElement& gamma) const {
  if (gamma.is_infinite()) throw DomainError("no uniformizer for infinity");
  if (gamma.rank() != rank()) {
    throw DimensionError("value " + gamma.to_string() + " does not match rank " +
                         std::to_string(rank()));
  }
  if (valuation_ == ValuationKind::PAdic) {
    return FieldElement(Scalar(static_cast<long>(prime_), 0).pow(gamma[0]));
  }
  FieldElement t = variable(0).pow(gamma[0]);
  if (rank() == 2) t *= variable(1).pow(gamma[1]);
  return t;
}

FieldElement ValuedField::maximal_ideal_generator() const {
  return uniformizer_for(GroupElement::smallest_positive(rank()));
}

std::vector<FieldElement> ValuedField::coefficient_pool() const {
  if (valuation_ == ValuationKind::PAdic) {
    const FieldElement p = from_int(static_cast<long>(prime_));
    return {zero(), one(), from_int(-1), p, p.inverse(), from_int(2)};
  }
  const FieldElement x = variable(0);
  return {zero(), one(), from_int(-1), x, x.inverse(), one() + x};
}

bool ValuedField::is_square(const FieldElement& x) const {
  check_element(x);
  if (nvars() == 0) return x.scalar().is_square();
  if (nvars() != 1) throw UnsupportedError("square test needs a univariate function field");
  if (base_ == 2) throw UnsupportedError("square test needs characteristic != 2");
  return poly_sqrt(x.numerator() * x.denominator()).has_value();
}

std::string ValuedField::describe() const {
  const std::string base = base_ == 0 ? "Q" : "F_" + std::to_string(base_);
  switch (valuation_) {
    case ValuationKind::PAdic:
      return "Q, " + std::to_string(prime_) + "-adic";
    case ValuationKind::OrderAtX:
      return base + "(" + vars_[0] + "), " + vars_[0] + "-adic";
    case ValuationKind::LexMonomial:
      return base + "(" + vars_[0] + "," + vars_[1] + "), lex monomial";
  }
  return base;
}

bool operator==(const ValuedField& a, const ValuedField& b) {
  return a.kind_ == b.kind_ && a.valuation_ == b.valuation_ && a.prime_ == b.prime_ &&
         a.base_ == b.base_ && a.vars_ == b.vars_;
}

}  // namespace valred
