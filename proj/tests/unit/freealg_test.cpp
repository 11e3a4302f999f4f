#include <doctest.h>

#include "support.hpp"
#include "valred/errors.hpp"

using namespace valred;
using namespace valred::testing;

namespace {

AlgebraElement nf(const Presentation& p, const std::string& s) { return normal_form(p, p.parse_element(s)); }

}  // namespace

TEST_CASE("quantum plane and quantum Weyl rules") {
  const auto qp = quantum_plane();
  REQUIRE(qp.rules().size() == 1);
  CHECK(qp.format(qp.rules()[0].rhs) == "2*Y*X");
  CHECK(qp.format(nf(qp, "X*Y")) == "2*Y*X");
  const auto qw = quantum_weyl();
  CHECK(qw.format(qw.rules()[0].rhs) == "2*Y*X + 1");
  CHECK(nf(qw, "X*Y - 2*Y*X") == nf(qw, "1"));
}

TEST_CASE("orientation is checked") {
  CHECK_THROWS_AS(make(ValuedField::rationals(3), {"X", "Y"}, {"X*Y = Y*X*Y"}), NonTerminatingError);
  CHECK_THROWS_AS(make(ValuedField::rationals(3), {"Y", "X"}, {"Y*X = X*Y + 1"}, FiltrationMode::Filtered),
                  NonTerminatingError);
  CHECK_THROWS_AS(make(ValuedField::rationals(3), {"Y", "X"}, {"X*Y = q*Y*X"}), UnknownConstantError);
}

TEST_CASE("normal forms") {
  const auto w = weyl_a1();
  // Oracle: DXD = (XD + 1)D.
  CHECK(w.format(nf(w, "D*X*D")) == "X*D^2 + D");
  const auto u = usl2();
  CHECK(u.format(nf(u, "e*f - f*e")) == "h");
  const auto a = w.parse_element("X*D + 3");
  CHECK(normal_form(w, a * w.scalar(w.field().one())) == normal_form(w, a));
}

TEST_CASE("strategies agree") {
  for (const auto& p : {weyl_a1(), usl2(), quantum_plane(), quantum_weyl(), quadratic_ext()}) {
    for (int d = 0; d <= 4; ++d) {
      for (const auto& word : words_of_degree(p, d)) {
        const auto m = AlgebraElement::monomial(word, p.field().one());
        CHECK(normal_form(p, m, Strategy::Leftmost) == normal_form(p, m, Strategy::Rightmost));
      }
    }
  }
}

TEST_CASE("filtration bases") {
  CHECK(filtration_basis(quantum_plane(), 2).size() == 3);
  const auto w = weyl_a1();
  std::vector<std::string> names;
  for (const auto& word : filtration_basis(w, 2)) names.push_back(w.format(word));
  CHECK(names == std::vector<std::string>{"1", "X", "D", "X^2", "X*D", "D^2"});
  CHECK(filtration_basis(usl2(), 0).size() == 1);
  // Oracle: PBW monomials X^a D^b with a + b <= n.
  for (int n = 0; n <= 6; ++n) CHECK(filtration_basis(w, n).size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
}

TEST_CASE("confluence") {
  CHECK(confluence_check(quantum_plane(), 6).empty());
  CHECK(confluence_check(usl2(), 3).empty());
  const auto bad = make(ValuedField::rationals(3), {"X", "Y"}, {"X*Y = 1", "Y*X = 0"});
  CHECK_FALSE(confluence_check(bad, 3).empty());
}

TEST_CASE("tensor presentation") {
  const auto qp = quantum_plane();
  const auto t = tensor_presentation(qp, qp);
  CHECK(t.num_generators() == 4);
  CHECK(t.rules().size() == 1 + 1 + 4);
  CHECK(filtration_basis(t, 1).size() == 4);
  // Oracle: convolution of the piece dimensions 1, 2, 3.
  CHECK(filtration_basis(t, 2).size() == 3 * 1 + 2 * 2 + 1 * 3);
  const auto unit = tensor_presentation(qp, trivial_presentation(qp.field()));
  CHECK(unit.num_generators() == 2);
  CHECK(unit.rules().size() == 1);
}
