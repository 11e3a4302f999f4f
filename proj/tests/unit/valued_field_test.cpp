#include <doctest.h>

#include "valred/errors.hpp"
#include "valred/valued_field.hpp"

using namespace valred;

TEST_CASE("p-adic values") {
  const auto q3 = ValuedField::rationals(3);
  CHECK(q3.value(q3.parse("9/2")) == GroupElement{2});
  CHECK(q3.value(q3.parse("-5/27")) == GroupElement{-3});
  CHECK(q3.value(q3.zero()).is_infinite());
  CHECK(q3.in_field_filtration(q3.parse("1/3"), GroupElement{1}));
  CHECK_FALSE(q3.in_field_filtration(q3.parse("1/3"), GroupElement{0}));
  CHECK(q3.in_field_filtration(q3.zero(), GroupElement{-7}));
}

TEST_CASE("order at X") {
  const auto k = ValuedField::rational_functions(0, {"X"});
  CHECK(k.value(k.parse("X^2/(1+X)")) == GroupElement{2});
  CHECK(k.value(k.parse("(X+X^3)/X^4")) == GroupElement{-3});
}

TEST_CASE("lex monomial value matches the minimum over monomials") {
  const auto k = ValuedField::rational_functions(0, {"X", "Y"});
  CHECK(k.value(k.parse("X^2*Y + Y^3")) == GroupElement{0, 3});
  // Oracle: the lex-least exponent pair among the listed monomials.
  const std::vector<std::pair<int, int>> exps{{2, 1}, {1, 4}, {1, 2}, {3, 1}};
  std::string text;
  for (auto [a, b] : exps) text += (text.empty() ? "" : " + ") + ("X^" + std::to_string(a) + "*Y^" + std::to_string(b));
  const auto m = *std::min_element(exps.begin(), exps.end());
  CHECK(k.value(k.parse(text)) == GroupElement{m.first, m.second});
}

TEST_CASE("residues") {
  const auto q3 = ValuedField::rationals(3);
  // Oracle: 7 * 2^{-1} mod 3 with 2^{-1} = 2.
  CHECK(q3.residue(q3.parse("7/2")) == Scalar::parse(std::to_string((7 * 2) % 3), 3));
  CHECK(q3.residue(q3.zero()).is_zero());
  CHECK_THROWS_AS((void)q3.residue(q3.parse("1/3")), NotIntegralError);
  const auto f5x = ValuedField::rational_functions(5, {"X"});
  // Oracle: evaluate at X = 0, 2 / 1.
  CHECK(f5x.residue(f5x.parse("(2+X)/(1+3*X)")) == Scalar::parse("2", 5));
  for (int r = 0; r < 5; ++r) {
    const Scalar s = Scalar::parse(std::to_string(r), 5);
    CHECK(f5x.residue(f5x.lift(s)) == s);
  }
}

TEST_CASE("uniformizers realize every value") {
  const auto q3 = ValuedField::rationals(3);
  CHECK(q3.uniformizer_for(GroupElement{-2}) == q3.parse("1/9"));
  CHECK(q3.uniformizer_for(GroupElement{0}) == q3.one());
  const auto lex = ValuedField::rational_functions(0, {"X", "Y"});
  CHECK(lex.uniformizer_for(GroupElement{1, -3}) == lex.parse("X/Y^3"));
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) CHECK(lex.value(lex.uniformizer_for(GroupElement{a, b})) == GroupElement{a, b});
  }
}

TEST_CASE("valuation axioms on the coefficient pools") {
  for (const auto& f : {ValuedField::rationals(3), ValuedField::rational_functions(5, {"X"}),
                        ValuedField::rational_functions(0, {"X", "Y"})}) {
    const auto pool = f.coefficient_pool();
    for (const auto& x : pool) {
      for (const auto& y : pool) {
        CHECK(f.value(x * y) == f.value(x) + f.value(y));
        CHECK(f.value(x + y) >= min(f.value(x), f.value(y)));
      }
    }
  }
}

TEST_CASE("parse errors") {
  const auto q3 = ValuedField::rationals(3);
  CHECK_THROWS_AS((void)q3.parse("1/0"), Error);
  CHECK_THROWS_AS((void)q3.parse("2 +"), ParseError);
}
