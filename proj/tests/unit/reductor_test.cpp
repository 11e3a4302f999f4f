#include <doctest.h>

#include "support.hpp"
#include "valred/errors.hpp"
#include "valred/reductor.hpp"

using namespace valred;
using namespace valred::testing;

namespace {

std::vector<GroupElement> gammas() {
  std::vector<GroupElement> g;
  for (int i = -2; i <= 2; ++i) g.push_back(GroupElement{i});
  return g;
}

std::vector<std::size_t> ranks(const Reductor& r) {
  std::vector<std::size_t> out;
  for (const auto& l : r.layers()) out.push_back(l.rank);
  return out;
}

Presentation sqrt_x_plus_2() {
  return make(ValuedField::rational_functions(5, {"X"}), {"xi"}, {"xi*xi = X + 2"});
}

}  // namespace

TEST_CASE("build: ranks follow the PBW counts") {
  const auto qp = build_reductor(quantum_plane(), 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(qp.layers()[n].rank - (n ? qp.layers()[n - 1].rank : 0) == static_cast<std::size_t>(n + 1));
  }
  const auto w = build_reductor(weyl_a1(), 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(w.layers()[n].rank == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    CHECK(w.layers()[n].dim == w.layers()[n].rank);
  }
  CHECK(w.all_nested());
  CHECK(w.layer_lattice(0).rank() == 1);
  CHECK_THROWS_AS((void)w.dim(7), DegreeOverflowError);
  CHECK_THROWS_AS((void)w.coordinates(w.presentation().parse_element("X^7")), DegreeOverflowError);
}

TEST_CASE("build: coefficients leaving O_v") {
  try {
    (void)build_reductor(quantum_plane("1/3"), 6);
    FAIL("expected CoefficientEscape");
  } catch (const CoefficientEscape& e) {
    CHECK(e.degree() == 2);
    CHECK(e.word() == "X*Y");
  }
  CHECK_NOTHROW((void)build_reductor(quantum_plane("1/3"), 1));
}

TEST_CASE("unramified") {
  CHECK(check_unramified(build_reductor(weyl_a1(), 6)).all());
  CHECK(check_unramified(build_reductor(quadratic_ext(), 4)).all());
  const ValuedField lex = ValuedField::rational_functions(0, {"X", "Y"});
  const Lattice j = Lattice::ideal_sum(lex, 2,
                                       {{Cut::principal(GroupElement{0, 0}), Vector{lex.one(), lex.zero()}},
                                        {Cut::limit(1), Vector{lex.zero(), lex.one()}}});
  CHECK(check_unramified({j}, {2}) == std::vector<bool>{false});
}

TEST_CASE("reduction of the quadratic extension is k[u] with u idempotent") {
  const auto red = reduction(build_reductor(quadratic_ext(), 4));
  CHECK(red.residue_modulus == 5);
  CHECK(red.labels == std::vector<std::string>{"1", "xi"});
  CHECK(red.describe(1, 1) == "xi * xi = xi");
  CHECK(red.associative);
}

TEST_CASE("reduction of U(sl2) is the mod 3 table") {
  const auto r = build_reductor(usl2(), 3);
  const auto red = reduction(r);
  auto index = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(red.labels.begin(), red.labels.end(), s) - red.labels.begin());
  };
  // Oracle: rational constants 1, -2, -2 read mod 3.
  auto coeff = [](int c) {
    const int m = ((c % 3) + 3) % 3;
    return m == 1 ? std::string() : std::to_string(m) + "*";
  };
  CHECK(red.describe(index("e"), index("f")) == "e * f = f*e + " + coeff(1) + "h");
  CHECK(red.describe(index("h"), index("f")) == "h * f = f*h + " + coeff(-2) + "f");
  CHECK(red.describe(index("e"), index("h")) == "e * h = h*e + " + coeff(-2) + "e");
  // Oracle: reduce the rational product coefficients one at a time.
  const ValuedField& f = r.field();
  for (const auto& [key, row] : red.table) {
    const auto prod = normal_form(r.presentation(), r.basis_element(key.first) * r.basis_element(key.second));
    const auto c = r.lambda_coordinates(r.coordinates(prod));
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto it = c.find(k);
      CHECK(row[k] == (it == c.end() ? f.residue(f.zero()) : f.residue(it->second)));
    }
  }
}

TEST_CASE("value function and symbols") {
  const auto qp = build_reductor(quantum_plane(), 4);
  const auto& p = qp.presentation();
  CHECK(value_function(qp, p.parse_element("3*X + Y")) == GroupElement{0});
  CHECK(value_function(qp, p.parse_element("9")) == GroupElement{2});
  const Symbol s = principal_symbol(qp, p.parse_element("3*X + Y"));
  CHECK(s.degree == GroupElement{0});
  CHECK(s.representative == normal_form(p, p.parse_element("Y")));
  CHECK_THROWS_AS((void)principal_symbol(qp, AlgebraElement{}), DomainError);
  const auto x = p.parse_element("X"), y = p.parse_element("Y");
  CHECK(value_function(qp, normal_form(p, x * y)) == value_function(qp, x) + value_function(qp, y));

  const auto q = build_reductor(quadratic_ext(), 4);
  const auto& qq = q.presentation();
  const auto xi = qq.parse_element("xi"), xim1 = qq.parse_element("xi - 1");
  CHECK(value_function(q, xi) == GroupElement{0});
  CHECK(value_function(q, xim1) == GroupElement{0});
  // xi^2 - xi = -X*xi - X.
  CHECK(normal_form(qq, xi * xim1) == normal_form(qq, qq.parse_element("-X*xi - X")));
  CHECK(value_function(q, normal_form(qq, xi * xim1)) == GroupElement{1});
}

TEST_CASE("crossed product structure") {
  CHECK(crossed_product_check(build_reductor(quantum_plane(), 4), gammas()).passed);
  CHECK(crossed_product_check(build_reductor(quantum_plane(), 4), {GroupElement{0}}).passed);
  CHECK(crossed_product_check(build_reductor(usl2(), 4), gammas()).passed);
}

TEST_CASE("valuation axioms") {
  const auto w = build_reductor(weyl_a1(), 4);
  const auto wv = valuation_axioms_check(w);
  CHECK(wv.is_valuation);
  CHECK(wv.pairs_checked > 0);
  const auto q = build_reductor(quadratic_ext(), 4);
  const auto qv = valuation_axioms_check(q);
  REQUIRE_FALSE(qv.is_valuation);
  CHECK(q.presentation().format(qv.counterexample->first) == "xi");
  CHECK(q.presentation().format(qv.counterexample->second) == "xi - 1");
  CHECK(qv.value_product == GroupElement{1});
  std::vector<AlgebraElement> scalars;
  for (const auto& c : q.field().coefficient_pool()) {
    if (!c.is_zero()) scalars.push_back(AlgebraElement::scalar(c));
  }
  CHECK(valuation_axioms_check(q, scalars).is_valuation);

  const auto& p = w.presentation();
  const auto a = p.parse_element("X*D"), b = p.parse_element("X");
  CHECK(fraction_value(w, wv, a, b) == GroupElement{0});
  CHECK(fraction_value(w, wv, a, a) == GroupElement{0});
  CHECK(fraction_value(w, wv, p.parse_element("3*X*D"), a) == GroupElement{1});
  CHECK_THROWS_AS((void)fraction_value(w, wv, a, AlgebraElement{}), DomainError);
  CHECK_THROWS_AS((void)fraction_value(q, qv, a, b), PreconditionError);
}

TEST_CASE("domain certificates") {
  for (const auto& p : {weyl_a1(), usl2(), quantum_plane(), quantum_weyl()}) {
    CHECK(domain_certificate(build_reductor(p, 3)));
  }
  CHECK_FALSE(domain_certificate(build_reductor(quadratic_ext(), 3)));
  const auto skew_square = make(ValuedField::rationals(3), {"Y", "X"}, {"X*Y = Y*X + Y*Y"});
  CHECK_FALSE(domain_certificate(build_reductor(skew_square, 3)));
  CHECK_FALSE(domain_certificate(build_reductor(quantum_plane("3"), 3)));
}

TEST_CASE("element pools are deterministic") {
  const auto w = build_reductor(weyl_a1(), 4);
  const auto base = element_pool(w);
  CHECK(base == element_pool(w));
  const auto seeded = element_pool(w, 2, 7);
  CHECK(seeded == element_pool(w, 2, 7));
  CHECK(seeded.size() == base.size() + 32);
  CHECK(std::equal(base.begin(), base.end(), seeded.begin()));
  CHECK(seeded != element_pool(w, 2, 8));
}

TEST_CASE("strong filtrations and the lemma identities") {
  const auto qp = build_reductor(quantum_plane(), 4);
  CHECK(strong_filtration_check(qp, GroupElement{1}, GroupElement{-1}));
  CHECK(strong_filtration_check(qp, GroupElement{0}, GroupElement{0}));
  CHECK(strong_filtration_check(build_reductor(usl2(), 4), GroupElement{2}, GroupElement{1}));
  CHECK(lemma_identities_check(qp, 4, gammas()).passed);
  CHECK(lemma_identities_check(build_reductor(weyl_a1(), 4), 4, gammas()).passed);
}

TEST_CASE("subalgebras") {
  const auto u = build_reductor(usl2(), 4);
  const auto h = subalgebra_reductor(u, {u.presentation().parse_element("h")}, 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(h.layers[n].rank() == n + 1);
    CHECK(residue_dim(h.layers[n]) == n + 1);
  }
  CHECK(std::all_of(h.unramified.begin(), h.unramified.end(), [](bool b) { return b; }));
  const auto& p = u.presentation();
  const auto all = subalgebra_reductor(u, {p.parse_element("f"), p.parse_element("h"), p.parse_element("e")}, 4);
  for (int n = 0; n <= 4; ++n) CHECK(all.layers[n].rank() == u.layers()[n].rank);
  const auto qp = build_reductor(quantum_plane(), 4);
  const auto x2 = subalgebra_reductor(qp, {qp.presentation().parse_element("X^2")}, 4);
  std::vector<std::size_t> got;
  for (const auto& l : x2.layers) got.push_back(l.rank());
  CHECK(got == std::vector<std::size_t>{1, 1, 2, 2, 3});
}

TEST_CASE("tensor products") {
  const auto qp = build_reductor(quantum_plane(), 4);
  const auto t = tensor_reductor(qp, qp, 4);
  CHECK(t.unramified);
  CHECK(t.matches_tensor_filtration);
  CHECK(t.reductor.dim(2) - t.reductor.dim(1) == 10);
  const auto k = build_reductor(trivial_presentation(qp.field()), 4);
  const auto tk = tensor_reductor(qp, k, 4);
  CHECK(ranks(tk.reductor) == ranks(qp));
  CHECK(connected_graded_check(t.reductor).passed);

  // Filtered times graded: F_n = sum over j of F_{n-j}A_1 (x) R_j.
  const auto w = build_reductor(weyl_a1(), 3);
  const auto mixed = tensor_reductor(w, qp, 3);
  CHECK(mixed.unramified);
  CHECK(mixed.matches_tensor_filtration);
  for (int n = 0; n <= 3; ++n) {
    std::size_t conv = 0;
    for (int j = 0; j <= n; ++j) conv += w.dim(n - j) * static_cast<std::size_t>(j + 1);
    CHECK(mixed.reductor.dim(n) == conv);
  }
}

TEST_CASE("valuation rings") {
  const auto v = valuation_ring_check(build_reductor(quadratic_ext(), 4));
  CHECK_FALSE(v.valuation_ring);
  CHECK_FALSE(v.residue_is_field);
  CHECK(v.minimal_polynomial == "T^2 - T");
  CHECK(v.consistent);
  const auto s = valuation_ring_check(build_reductor(sqrt_x_plus_2(), 4));
  CHECK(s.valuation_ring);
  CHECK(s.minimal_polynomial == "T^2 - 2");
  CHECK(s.consistent);
  const auto k = valuation_ring_check(build_reductor(trivial_presentation(ValuedField::rationals(3)), 2));
  CHECK(k.valuation_ring);
  CHECK_THROWS_AS((void)valuation_ring_check(build_reductor(weyl_a1(), 2)), UnsupportedError);
}

TEST_CASE("connection between the reductor, its graded ring and the Rees ring") {
  CHECK(connection_check(build_reductor(usl2(), 4)).passed);
  CHECK(connection_check(build_reductor(quantum_plane(), 5)).passed);
  const auto w = build_reductor(weyl_a1(), 4);
  CHECK(connection_check(w).passed);
  CHECK(graded_symbols_commute(w).passed);
  CHECK(graded_symbols_commute(build_reductor(usl2(), 4)).passed);
  CHECK_FALSE(graded_symbols_commute(build_reductor(quantum_plane(), 4)).passed);
}

TEST_CASE("connected graded algebras") {
  const auto v = connected_graded_check(build_reductor(quantum_plane(), 5));
  CHECK(v.passed);
  CHECK(v.degree_one_residue_dim == 2);
  const auto free2 = make(ValuedField::rationals(3), {"X", "Y"}, {}, FiltrationMode::Graded);
  CHECK(connected_graded_check(build_reductor(free2, 3)).passed);
  CHECK_THROWS_AS((void)connected_graded_check(build_reductor(weyl_a1(), 2)), PreconditionError);
}

TEST_CASE("strategy independence") {
  for (const auto& p : {weyl_a1(), usl2(), quantum_plane(), quantum_weyl(), quadratic_ext()}) {
    CHECK(strategy_independence_check(p, 4).passed);
  }
}
