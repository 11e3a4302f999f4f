#include <doctest.h>

#include "valred/errors.hpp"
#include "valred/lattice.hpp"

using namespace valred;

namespace {

const ValuedField& z3() {
  static const ValuedField f = ValuedField::rationals(3);
  return f;
}

Vector vec(const ValuedField& f, std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(f.parse(x));
  return v;
}

Lattice fg(std::vector<Vector> gens, std::size_t dim = 2) {
  return Lattice::finitely_generated(z3(), dim, std::move(gens));
}

// Mutual membership of two generating sets.
bool spans_agree(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const Lattice la = fg(a), lb = fg(b);
  for (const auto& x : a) {
    if (!member(x, lb)) return false;
  }
  for (const auto& x : b) {
    if (!member(x, la)) return false;
  }
  return true;
}

Lattice ramified() {
  static const ValuedField lex = ValuedField::rational_functions(0, {"X", "Y"});
  return Lattice::ideal_sum(lex, 2,
                            {{Cut::principal(GroupElement{0, 0}), vec(lex, {"1", "0"})},
                             {Cut::limit(1), vec(lex, {"0", "1"})}});
}

}  // namespace

TEST_CASE("triangularize") {
  const std::vector<Vector> gens{vec(z3(), {"3", "1"}), vec(z3(), {"6", "1"})};
  const auto basis = triangularize(fg(gens));
  CHECK(basis.size() == 2);
  CHECK(spans_agree(gens, basis));
  CHECK(spans_agree(basis, {vec(z3(), {"3", "1"}), vec(z3(), {"3", "0"})}));
  CHECK(triangularize(fg({vec(z3(), {"0", "0"})})).empty());
  const auto one = triangularize(fg({vec(z3(), {"3", "0"}), vec(z3(), {"1", "0"})}));
  REQUIRE(one.size() == 1);
  CHECK(spans_agree(one, {vec(z3(), {"1", "0"})}));
}

TEST_CASE("pivots strictly increase along elimination order") {
  const auto m = fg({vec(z3(), {"1/3", "2", "0"}), vec(z3(), {"9", "1", "1"}), vec(z3(), {"0", "3", "27"})}, 3);
  const auto& b = m.basis();
  for (std::size_t i = 0; i < b.order.size(); ++i) {
    for (std::size_t j = i + 1; j < b.order.size(); ++j) {
      CHECK(b.vectors[b.order[j]][b.pivots[b.order[i]]].is_zero());
    }
  }
}

TEST_CASE("residue dimension and unramified") {
  const auto m = fg({vec(z3(), {"3", "1"}), vec(z3(), {"3", "0"})});
  CHECK(residue_dim(m) == 2);
  CHECK(is_unramified(m, 2));
  CHECK(is_unramified(fg({vec(z3(), {"1", "0"}), vec(z3(), {"0", "1"})}), 2));
  CHECK(residue_dim(fg({})) == 0);
  CHECK_THROWS_AS((void)is_unramified(fg({vec(z3(), {"1", "0"})}), 2), NotALatticeError);

  const Lattice j = ramified();
  CHECK(residue_dim(j) == 1);
  CHECK_FALSE(is_unramified(j, 2));
}

TEST_CASE("the limit summand satisfies m_v J = J") {
  const Lattice j = ramified();
  const ValuedField& lex = j.field();
  const Cut& cut = j.summands()[1].first;
  const FieldElement y = lex.parse("Y");
  CHECK(lex.value(y) > GroupElement{0, 0});
  for (int m = -5; m <= 40; ++m) {
    // X Y^{-m} = Y * (X Y^{-m-1}), both factors in the right places.
    const FieldElement g = lex.parse("X") * lex.uniformizer_for(GroupElement{0, -m});
    const FieldElement h = lex.parse("X") * lex.uniformizer_for(GroupElement{0, -m - 1});
    CHECK(cut.contains(lex, g));
    CHECK(cut.contains(lex, h));
    CHECK(y * h == g);
  }
  CHECK_FALSE(cut.contains(lex, y));
}

TEST_CASE("membership") {
  const auto m = fg({vec(z3(), {"3", "1"}), vec(z3(), {"3", "0"})});
  CHECK(member(vec(z3(), {"3", "1"}), m));
  CHECK_FALSE(member(vec(z3(), {"1", "0"}), m));
  CHECK(member(vec(z3(), {"9", "-2"}), m));
  const Lattice j = ramified();
  const ValuedField& lex = j.field();
  CHECK(member(vec(lex, {"0", "X/Y^100"}), j));
  CHECK_FALSE(member(vec(lex, {"1/Y", "0"}), j));
  CHECK_FALSE(member(vec(lex, {"0", "Y"}), j));
  CHECK(member(vec(lex, {"1", "X"}), j));
}

TEST_CASE("ideal sums need independent directions") {
  const ValuedField lex = ValuedField::rational_functions(0, {"X", "Y"});
  CHECK_THROWS_AS(Lattice::ideal_sum(lex, 2,
                                     {{Cut::principal(GroupElement{0, 0}), vec(lex, {"1", "1"})},
                                      {Cut::limit(1), vec(lex, {"2", "2"})}}),
                  RankError);
  CHECK_THROWS_AS(Lattice::ideal_sum(z3(), 1, {{Cut::limit(1), vec(z3(), {"1"})}}), DimensionError);
}

TEST_CASE("lifting residue bases") {
  const auto std2 = fg({vec(z3(), {"1", "0"}), vec(z3(), {"0", "1"})});
  auto r = [](const char* s) { return Scalar::parse(s, 3); };
  const auto lifted = lift_residue_basis(std2, {{r("1"), r("1")}, {r("0"), r("1")}});
  CHECK(spans_agree(lifted, std2.basis().vectors));
  CHECK_THROWS_AS(lift_residue_basis(std2, {{r("1"), r("0")}, {r("1"), r("0")}}), RankError);
  const auto m = fg({vec(z3(), {"3", "1"}), vec(z3(), {"3", "0"})});
  const auto l2 = lift_residue_basis(m, {{r("1"), r("2")}, {r("1"), r("0")}});
  CHECK(spans_agree(l2, m.generators()));
}

TEST_CASE("quotients") {
  const auto std2 = fg({vec(z3(), {"1", "0"}), vec(z3(), {"0", "1"})});
  const auto q = quotient_lattice(std2, {vec(z3(), {"1", "0"})});
  CHECK(q.ambient_dim() == 1);
  CHECK(q.rank() == 1);
  CHECK(member(vec(z3(), {"1"}), q));
  const auto m = fg({vec(z3(), {"3", "1"}), vec(z3(), {"3", "0"})});
  const auto q2 = quotient_lattice(m, {vec(z3(), {"0", "1"})});
  CHECK(q2.rank() == 1);
  CHECK(residue_dim(q2) == 1);
  CHECK(member(vec(z3(), {"3"}), q2));
  CHECK_FALSE(member(vec(z3(), {"1"}), q2));
  CHECK(quotient_lattice(fg({}), {vec(z3(), {"1", "0"})}).rank() == 0);
}

TEST_CASE("module values") {
  const auto std2 = fg({vec(z3(), {"1", "0"}), vec(z3(), {"0", "1"})});
  CHECK(module_value(vec(z3(), {"3", "1/3"}), std2) == GroupElement{-1});
  CHECK(module_value(vec(z3(), {"9", "0"}), std2) == GroupElement{2});
  CHECK(module_value(vec(z3(), {"0", "0"}), std2).is_infinite());
  CHECK_THROWS_AS((void)module_value(vec(z3(), {"0", "1"}), fg({vec(z3(), {"1", "0"})})), DomainError);
}

TEST_CASE("intersections and scaling") {
  const auto m = fg({vec(z3(), {"1", "1"}), vec(z3(), {"0", "3"})});
  const auto cut = intersect_subspace(m, {vec(z3(), {"0", "1"})});
  CHECK(cut.rank() == 1);
  // Oracle: a(1,1) + b(0,3) has first coordinate 0 iff a = 0.
  CHECK(member(vec(z3(), {"0", "3"}), cut));
  CHECK_FALSE(member(vec(z3(), {"0", "1"}), cut));
  const auto s = scale(m, z3().parse("3"));
  CHECK(contains_module(m, s));
  CHECK_FALSE(contains_module(s, m));
  CHECK(same_module(m, fg({vec(z3(), {"1", "4"}), vec(z3(), {"0", "-3"})})));
}
