#include <doctest.h>

#include <random>

#include "valred/errors.hpp"
#include "valred/ordered_group.hpp"

using valred::GroupElement;

TEST_CASE("lex comparison") {
  CHECK((GroupElement{0, 3} <=> GroupElement{2, 1}) == std::strong_ordering::less);
  CHECK((GroupElement{1, 5} <=> GroupElement{1, 5}) == std::strong_ordering::equal);
  CHECK((GroupElement::infinity() <=> GroupElement{9, -9}) == std::strong_ordering::greater);
  CHECK_THROWS_AS((void)valred::lex_compare(GroupElement{1}, GroupElement{1, 0}), valred::DimensionError);
}

TEST_CASE("addition and negation") {
  CHECK(GroupElement{1, 0} + GroupElement{0, -2} == GroupElement{1, -2});
  CHECK(GroupElement{3} + -GroupElement{3} == GroupElement{0});
  CHECK((GroupElement::infinity() + GroupElement{5, 5}).is_infinite());
  CHECK_THROWS_AS((void)-GroupElement::infinity(), valred::DomainError);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"(0)", "(-4)", "(1,-3)", "inf"}) CHECK(GroupElement::parse(s).to_string() == s);
  CHECK(GroupElement::smallest_positive(2) == GroupElement{0, 1});
}

TEST_CASE("order is total and translation invariant on a box") {
  // Oracle: compare coordinates one at a time.
  auto naive_less = [](const GroupElement& a, const GroupElement& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  };
  std::vector<GroupElement> box;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) box.push_back(GroupElement{a, b});
  }
  for (const auto& x : box) {
    CHECK(x < GroupElement::infinity());
    for (const auto& y : box) {
      CHECK((x < y) == naive_less(x, y));
      CHECK(((x < y) + (y < x) + (x == y)) == 1);
      for (const auto& z : box) {
        if (x < y) CHECK(x + z < y + z);
      }
    }
  }
}
