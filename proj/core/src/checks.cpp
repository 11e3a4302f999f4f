#include <algorithm>
#include <random>
#include <set>

#include "valred/errors.hpp"
#include "valred/reductor.hpp"

namespace valred {

namespace {

std::vector<Vector> leading_units(const ValuedField& f, std::size_t ambient, std::size_t first,
                                  std::size_t last) {
  std::vector<Vector> out;
  for (std::size_t i = first; i < last; ++i) out.push_back(unit_vector(f, ambient, i));
  return out;
}

GroupElement min_value(const ValuedField& f, const SparseVector& c) {
  GroupElement best = GroupElement::infinity();
  for (const auto& [i, a] : c) best = min(best, f.value(a));
  return best;
}

SparseVector sparse_add(SparseVector a, const SparseVector& b) {
  for (const auto& [k, x] : b) {
    auto [it, inserted] = a.emplace(k, x);
    if (!inserted) {
      it->second += x;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

bool is_integral_vector(const ValuedField& f, const SparseVector& c) {
  return std::all_of(c.begin(), c.end(), [&](const auto& kv) { return f.is_integral(kv.second); });
}

std::vector<ResidueElement> unit_residue(std::size_t n, std::size_t i, std::uint32_t mod) {
  std::vector<ResidueElement> e(n, ResidueElement(0, mod));
  e[i] = ResidueElement(1, mod);
  return e;
}

std::vector<std::size_t> basis_up_to(const Reductor& r, int degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.basis().rank(); ++i) {
    if (r.basis_degree(i) <= degree) out.push_back(i);
  }
  return out;
}

}  // namespace

CheckOutcome crossed_product_check(const Reductor& r, const std::vector<GroupElement>& gammas,
                                   int pair_degree) {
  const ValuedField& f = r.field();
  const Reduction red = reduction(r);
  const std::size_t rank = r.basis().rank();
  const std::uint32_t mod = red.residue_modulus;
  CheckOutcome out{true, {}, 0};
  const SparseVector one = r.lambda_coordinates(r.coordinates(AlgebraElement::scalar(f.one())));

  // Degree -v_F and residue of x / t_{v_F(x)} on the basis.
  auto symbol = [&](const SparseVector& c) {
    const GroupElement v = min_value(f, c);
    const FieldElement t = f.uniformizer_for(v);
    std::vector<ResidueElement> res(rank, ResidueElement(0, mod));
    for (const auto& [k, x] : c) {
      if (f.value(x) == v) res[k] = f.residue(x / t);
    }
    return std::make_pair(-v, res);
  };
  auto scaled_sparse = [](SparseVector c, const FieldElement& t) {
    for (auto& kv : c) kv.second *= t;
    return c;
  };

  for (const auto& gamma : gammas) {
    const SparseVector t_gamma = scaled_sparse(one, f.uniformizer_for(gamma));
    std::vector<std::vector<ResidueElement>> image;
    for (std::size_t i = 0; i < rank; ++i) {
      const SparseVector x{{i, f.uniformizer_for(-gamma)}};
      const auto [degree, residue] = symbol(r.multiply_lambda(t_gamma, x));
      ++out.cases;
      if (degree != GroupElement::zero(f.rank())) {
        out.passed = false;
        out.witness = "sigma(t_gamma) moves degree " + gamma.to_string() + " to " + degree.to_string();
        return out;
      }
      image.push_back(residue);
    }
    if (matrix_rank(image) != rank) {
      out.passed = false;
      out.witness = "multiplication by sigma(t_gamma) is not bijective at " + gamma.to_string();
      return out;
    }
  }

  const auto small = basis_up_to(r, pair_degree);
  for (std::size_t i : small) {
    for (std::size_t j : small) {
      if (r.basis_degree(i) + r.basis_degree(j) > r.max_degree()) continue;
      const auto expected = red.product(unit_residue(rank, i, mod), unit_residue(rank, j, mod));
      const bool nonzero = std::any_of(expected.begin(), expected.end(),
                                       [](const ResidueElement& e) { return !e.is_zero(); });
      for (const auto& gamma : gammas) {
        for (const auto& delta : gammas) {
          ++out.cases;
          const SparseVector x{{i, f.uniformizer_for(-gamma)}};
          const SparseVector y{{j, f.uniformizer_for(-delta)}};
          const SparseVector xy = r.multiply_lambda(x, y);
          const GroupElement target = -(gamma + delta);
          bool ok;
          if (nonzero) {
            const auto [degree, residue] = symbol(xy);
            ok = degree == -target && residue == expected;
          } else {
            ok = min_value(f, xy) > target;
          }
          if (!ok) {
            out.passed = false;
            out.witness = "pair (" + red.labels[i] + ", " + red.labels[j] + ") at degrees " +
                          gamma.to_string() + ", " + delta.to_string();
            return out;
          }
        }
      }
    }
  }
  return out;
}

std::vector<AlgebraElement> element_pool(const Reductor& r, int max_degree,
                                         std::optional<std::uint64_t> seed) {
  const ValuedField& f = r.field();
  const int d = std::min(max_degree, r.max_degree() / 2);
  std::vector<Word> words;
  for (const auto& w : r.words()) {
    if (w.degree <= d) words.push_back(w);
  }
  std::vector<FieldElement> coeffs;
  for (const auto& c : f.coefficient_pool()) {
    if (!c.is_zero()) coeffs.push_back(c);
  }
  std::vector<AlgebraElement> pool;
  for (const auto& w : words) {
    for (const auto& c : coeffs) pool.push_back(AlgebraElement::monomial(w, c));
  }
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      for (const auto& c2 : coeffs) {
        for (const auto& c1 : coeffs) {
          AlgebraElement x = AlgebraElement::monomial(words[a], c1);
          x.add_term(words[b], c2);
          pool.push_back(std::move(x));
        }
      }
    }
  }
  if (seed && !words.empty()) {
    std::mt19937_64 rng(*seed);
    std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_coeff(0, coeffs.size() - 1);
    for (int k = 0; k < 32; ++k) {
      AlgebraElement x;
      for (int t = 0; t < 3; ++t) x.add_term(words[pick_word(rng)], coeffs[pick_coeff(rng)]);
      if (!x.is_zero()) pool.push_back(std::move(x));
    }
  }
  return pool;
}

ValuationVerdict valuation_axioms_check(const Reductor& r, const std::vector<AlgebraElement>& pool) {
  const ValuedField& f = r.field();
  std::vector<SparseVector> coords;
  std::vector<GroupElement> values;
  for (const auto& a : pool) {
    coords.push_back(r.lambda_coordinates(r.coordinates(a)));
    values.push_back(min_value(f, coords.back()));
  }
  ValuationVerdict v;
  v.is_valuation = true;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      ++v.pairs_checked;
      const GroupElement prod = min_value(f, r.multiply_lambda(coords[i], coords[j]));
      std::string broken;
      GroupElement result = prod;
      if (prod != values[i] + values[j]) {
        broken = "multiplicative";
      } else {
        const GroupElement sum = min_value(f, sparse_add(coords[i], coords[j]));
        if (sum < min(values[i], values[j])) {
          broken = "ultrametric";
          result = sum;
        }
      }
      if (!broken.empty()) {
        v.is_valuation = false;
        v.counterexample = std::make_pair(pool[i], pool[j]);
        v.violated = broken;
        v.value_a = values[i];
        v.value_b = values[j];
        v.value_product = result;
        return v;
      }
    }
  }
  return v;
}

ValuationVerdict valuation_axioms_check(const Reductor& r) {
  return valuation_axioms_check(r, element_pool(r));
}

std::optional<std::string> domain_certificate(const Reductor& r) {
  const Presentation& p = r.presentation();
  const ValuedField& f = p.field();
  const std::size_t g = p.num_generators();
  if (p.rules().size() != g * (g - 1) / 2 || !check_unramified(r).all()) return std::nullopt;
  std::set<std::pair<std::uint8_t, std::uint8_t>> seen;
  for (const auto& rule : p.rules()) {
    if (rule.lhs.size() != 2) return std::nullopt;
    const std::uint8_t hi = rule.lhs.letters[0], lo = rule.lhs.letters[1];
    if (hi <= lo || !seen.emplace(hi, lo).second) return std::nullopt;
    const Word swapped = p.make_word(std::vector<std::uint8_t>{lo, hi});
    bool leading = false;
    for (const auto& [w, c] : rule.rhs.terms()) {
      if (w == swapped) {
        leading = f.value(c) == GroupElement::zero(f.rank());
      } else if (w.degree >= rule.lhs.degree) {
        return std::nullopt;
      }
    }
    if (!leading) return std::nullopt;
  }
  return g == 0 ? std::string("reduction is k_v") : std::string("skew PBW: graded reduction is a quantum affine space");
}

GroupElement fraction_value(const Reductor& r, const ValuationVerdict& verdict,
                            const AlgebraElement& a, const AlgebraElement& b) {
  if (!verdict.is_valuation) {
    throw PreconditionError("fraction_value needs a passing valuation axioms check");
  }
  if (b.is_zero()) throw DomainError("fraction with zero denominator");
  return value_function(r, a) - value_function(r, b);
}

bool strong_filtration_check(const Reductor& r, const GroupElement& gamma,
                             const GroupElement& delta) {
  const ValuedField& f = r.field();
  const FieldElement tg = f.uniformizer_for(-gamma);
  const FieldElement td = f.uniformizer_for(-delta);
  const GroupElement target = -(gamma + delta);
  const std::size_t rank = r.basis().rank();
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (r.basis_degree(i) + r.basis_degree(j) > r.max_degree()) continue;
      const SparseVector xy = r.multiply_lambda({{i, tg}}, {{j, td}});
      if (min_value(f, xy) < target) return false;
    }
  }
  SparseVector t_delta = r.lambda_coordinates(r.coordinates(AlgebraElement::scalar(f.one())));
  for (auto& kv : t_delta) kv.second *= td;
  const FieldElement tgd = f.uniformizer_for(target);
  for (std::size_t k = 0; k < rank; ++k) {
    const SparseVector lhs = r.multiply_lambda({{k, tg}}, t_delta);
    if (!(lhs == SparseVector{{k, tgd}})) return false;
  }
  return true;
}

CheckOutcome lemma_identities_check(const Reductor& r, int max_n,
                                    const std::vector<GroupElement>& gammas) {
  const ValuedField& f = r.field();
  const int top = std::min(max_n, r.max_degree());
  const FieldElement pi = f.maximal_ideal_generator();
  const std::size_t d = r.ambient_dim();
  CheckOutcome out{true, {}, 0};
  for (int j = 0; j <= top; ++j) {
    const Lattice mj = scale(r.ambient_lattice(j), pi);
    for (int i = 0; i <= j; ++i) {
      ++out.cases;
      const Lattice meet = intersect_subspace(mj, leading_units(f, d, 0, r.dim(i)));
      if (!same_module(meet, scale(r.ambient_lattice(i), pi))) {
        out.passed = false;
        out.witness = "m_v F_" + std::to_string(j) + " Lambda meet F_" + std::to_string(i) + " Lambda";
        return out;
      }
    }
  }
  const Lattice whole = r.ambient_lattice(r.max_degree());
  for (const auto& gamma : gammas) {
    const FieldElement t = f.uniformizer_for(-gamma);
    const Lattice scaled_whole = scale(whole, t);
    for (int n = 0; n <= top; ++n) {
      ++out.cases;
      const Lattice lhs = intersect_subspace(scaled_whole, leading_units(f, d, 0, r.dim(n)));
      if (!same_module(lhs, scale(r.ambient_lattice(n), t))) {
        out.passed = false;
        out.witness = "identity (1) at gamma=" + gamma.to_string() + ", n=" + std::to_string(n);
        return out;
      }
    }
  }
  return out;
}

SubReductor subalgebra_reductor(const Reductor& r, const std::vector<AlgebraElement>& gens, int n) {
  if (n > r.max_degree()) throw DegreeOverflowError("subalgebra degree exceeds reductor bound");
  const Presentation& p = r.presentation();
  const ValuedField& f = r.field();
  const std::size_t d = r.ambient_dim();
  std::vector<AlgebraElement> generators;
  for (const auto& g : gens) {
    AlgebraElement nf = normal_form(p, g);
    if (nf.degree() > r.max_degree()) throw DegreeOverflowError("generator exceeds degree bound");
    generators.push_back(std::move(nf));
  }

  std::vector<std::vector<Vector>> spanning(static_cast<std::size_t>(n + 1));
  auto absorb = [&](const AlgebraElement& a) {
    const int deg = std::max(a.degree(), 0);
    if (a.is_zero() || deg > n) return;
    const Vector v = r.coordinates(a);
    for (int m = deg; m <= n; ++m) spanning[static_cast<std::size_t>(m)].push_back(v);
  };
  auto dims = [&]() {
    std::vector<std::size_t> out;
    for (const auto& s : spanning) out.push_back(span_dim(f, d, s));
    return out;
  };

  std::vector<AlgebraElement> frontier{AlgebraElement::scalar(f.one())};
  absorb(frontier.front());
  std::vector<std::size_t> current = dims();
  const int cap = n + 2;
  int stable_at = -1;
  for (int length = 1; length <= cap && !generators.empty(); ++length) {
    std::vector<AlgebraElement> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        AlgebraElement prod = multiply(p, a, g);
        if (prod.is_zero()) continue;
        absorb(prod);
        next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
    std::vector<std::size_t> updated = dims();
    if (updated == current) {
      stable_at = length - 1;
      break;
    }
    current = std::move(updated);
  }
  if (generators.empty()) stable_at = 0;
  if (stable_at < 0) {
    throw InconclusiveError("products of the generators did not stabilize by length " +
                            std::to_string(cap));
  }

  SubReductor out;
  out.product_length = stable_at;
  for (int m = 0; m <= n; ++m) {
    const Subspace s(f, d, spanning[static_cast<std::size_t>(m)]);
    out.dims.push_back(s.dim());
    Lattice layer = intersect_subspace(r.ambient_lattice(m), s.basis());
    out.unramified.push_back(layer.span_dim() == s.dim() && is_unramified(layer, s.dim()));
    out.layers.push_back(std::move(layer));
  }
  return out;
}

TensorReductor tensor_reductor(const Reductor& a, const Reductor& b, int n) {
  if (n > a.max_degree() || n > b.max_degree()) {
    throw DegreeOverflowError("tensor degree exceeds a factor's bound");
  }
  Presentation tp = tensor_presentation(a.presentation(), b.presentation());
  TensorReductor out{build_reductor(tp, n), false, false};
  const Reductor& t = out.reductor;
  const auto offset = static_cast<std::uint8_t>(a.presentation().num_generators());

  auto embed = [&](const Vector& x, const Vector& y) {
    AlgebraElement e;
    for (std::size_t u = 0; u < x.size(); ++u) {
      if (x[u].is_zero()) continue;
      for (std::size_t v = 0; v < y.size(); ++v) {
        if (y[v].is_zero()) continue;
        Word w = a.words()[u];
        for (auto letter : b.words()[v].letters) w.letters.push_back(static_cast<std::uint8_t>(letter + offset));
        w.degree += b.words()[v].degree;
        e.add_term(w, x[u] * y[v]);
      }
    }
    return t.coordinates(e);
  };

  out.matches_tensor_filtration = true;
  for (int m = 0; m <= n && out.matches_tensor_filtration; ++m) {
    std::vector<Vector> gens;
    for (int i = 0; i <= m; ++i) {
      for (const auto& x : a.layer_basis(i).vectors) {
        for (const auto& y : b.layer_basis(m - i).vectors) gens.push_back(embed(x, y));
      }
    }
    const Lattice expected = Lattice::finitely_generated(t.field(), t.ambient_dim(), std::move(gens));
    out.matches_tensor_filtration = same_module(expected, t.ambient_lattice(m));
  }
  out.unramified = check_unramified(t).all();
  return out;
}

namespace {

// Symmetric representative for F_p, so -1 in F_5 reads "-1" rather than "4".
std::string signed_text(const ResidueElement& c) {
  const auto mod = c.modulus();
  if (mod == 0) return c.to_string();
  mpz_class v(c.value());
  if (v > mod / 2) v -= mod;
  return v.get_str();
}

// T^2 - c1 T - c0
std::string quadratic_text(const ResidueElement& c1, const ResidueElement& c0) {
  std::string s = "T^2";
  auto term = [&](const ResidueElement& c, const std::string& mono) {
    if (c.is_zero()) return;
    std::string digits = signed_text(-c);
    const bool negative = digits[0] == '-';
    if (negative) digits.erase(0, 1);
    s += negative ? " - " : " + ";
    if (mono.empty()) {
      s += digits;
    } else {
      s += (digits == "1" ? std::string{} : digits + "*") + mono;
    }
  };
  term(c1, "T");
  term(c0, "");
  return s;
}

}  // namespace

ValuationRingVerdict valuation_ring_check(const Reductor& r) {
  const Presentation& p = r.presentation();
  const ValuedField& f = r.field();
  ValuationRingVerdict out;
  if (p.num_generators() == 0) {
    out.residue_is_field = true;
    out.valuation_ring = true;
    out.minimal_polynomial = "T";
    out.consistent = true;
    for (const auto& c : f.coefficient_pool()) {
      if (c.is_zero()) continue;
      if (!f.is_integral(c) && !f.is_integral(c.inverse())) {
        out.consistent = false;
        out.witness = AlgebraElement::scalar(c);
      }
    }
    return out;
  }
  const bool quadratic = p.num_generators() == 1 && p.rules().size() == 1 &&
                         p.rules()[0].lhs.size() == 2 && p.mode() == FiltrationMode::Filtered;
  if (!quadratic) {
    throw UnsupportedError("valuation_ring_check supports K and quadratic extensions K[xi] only");
  }
  if (f.base_modulus() == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (r.max_degree() < 2) throw PreconditionError("valuation_ring_check needs degree bound >= 2");
  const Word one_word{0, {}};
  const Word xi_word = p.generator_word(0);
  const AlgebraElement& rhs = p.rules()[0].rhs;
  const FieldElement a = rhs.coefficient(xi_word);
  const FieldElement b = rhs.coefficient(one_word);
  if (f.is_square(a * a + f.from_int(4) * b)) {
    throw PreconditionError("A is not a field: the discriminant is a square");
  }

  const Reduction red = reduction(r);
  const std::uint32_t mod = red.residue_modulus;
  auto residue_of = [&](const AlgebraElement& e) {
    std::vector<ResidueElement> res(r.basis().rank(), ResidueElement(0, mod));
    for (const auto& [k, c] : r.lambda_coordinates(r.coordinates(e))) res[k] = f.residue(c);
    return res;
  };
  const auto one = residue_of(AlgebraElement::scalar(f.one()));
  const auto xi = residue_of(p.generator(0));
  const auto sq = red.product(xi, xi);
  // Solve sq = c0*one + c1*xi by Cramer's rule on the first independent pair of rows.
  ResidueElement c0(0, mod), c1(0, mod);
  bool solved = false;
  for (std::size_t s = 0; s < one.size() && !solved; ++s) {
    for (std::size_t u = s + 1; u < one.size() && !solved; ++u) {
      const ResidueElement det = one[s] * xi[u] - one[u] * xi[s];
      if (det.is_zero()) continue;
      c0 = (sq[s] * xi[u] - sq[u] * xi[s]) / det;
      c1 = (one[s] * sq[u] - one[u] * sq[s]) / det;
      solved = true;
    }
  }
  if (!solved) throw RankError("1 and xi are dependent in the reduction");
  out.minimal_polynomial = quadratic_text(c1, c0);
  if (mod > 0) {
    out.residue_is_field = true;
    for (std::uint32_t t = 0; t < mod; ++t) {
      const ResidueElement x(static_cast<long>(t), mod);
      if ((x * x - c1 * x - c0).is_zero()) {
        out.residue_is_field = false;
        break;
      }
    }
  } else {
    out.residue_is_field = !(c1 * c1 + ResidueElement(4, 0) * c0).is_square();
  }
  out.valuation_ring = out.residue_is_field;

  auto in_lambda = [&](const Vector& v) { return is_integral_vector(f, r.lambda_coordinates(v)); };
  std::optional<AlgebraElement> violator;
  for (const auto& k1 : f.coefficient_pool()) {
    for (const auto& k0 : f.coefficient_pool()) {
      if (k0.is_zero() && k1.is_zero()) continue;
      AlgebraElement x = AlgebraElement::monomial(one_word, k0);
      x.add_term(xi_word, k1);
      const Vector xv = r.coordinates(x);
      if (in_lambda(xv)) continue;
      std::vector<Vector> m(r.ambient_dim(), zero_vector(f, r.ambient_dim()));
      for (std::size_t col = 0; col < r.ambient_dim(); ++col) {
        const Vector image = r.multiply(xv, unit_vector(f, r.ambient_dim(), col));
        for (std::size_t row = 0; row < r.ambient_dim(); ++row) m[row][col] = image[row];
      }
      auto inv = solve_square(m, r.coordinates(AlgebraElement::scalar(f.one())));
      if (inv && in_lambda(*inv)) continue;
      violator = x;
      break;
    }
    if (violator) break;
  }
  out.witness = violator;
  out.consistent = violator.has_value() != out.valuation_ring;
  return out;
}

ConnectionVerdict connection_check(const Reductor& r) {
  const ValuedField& f = r.field();
  ConnectionVerdict out;
  for (int n = 0; n <= r.max_degree(); ++n) {
    const std::size_t dn = r.dim(n);
    const std::size_t dprev = r.dim(n - 1);
    const Lattice layer = r.layer_lattice(n);
    out.filtered.push_back(layer.span_dim() == dn && is_unramified(layer, dn));

    const Lattice piece = quotient_lattice(layer, leading_units(f, dn, 0, dprev));
    out.graded.push_back(piece.span_dim() == dn - dprev && is_unramified(piece, dn - dprev));

    const Lattice rees = r.ambient_lattice(n);
    bool rees_ok = rees.span_dim() == dn && residue_dim(rees) == dn;
    if (n > 0) rees_ok = rees_ok && contains_module(rees, r.ambient_lattice(n - 1));
    out.rees.push_back(rees_ok);

    bool torsion_free = true;
    if (n > 0) {
      const Lattice meet = intersect_subspace(rees, leading_units(f, r.ambient_dim(), 0, dprev));
      torsion_free = same_module(meet, r.ambient_lattice(n - 1));
    }
    out.torsion_free.push_back(torsion_free);
  }
  out.agree = out.filtered == out.graded && out.graded == out.rees;
  out.passed = out.agree &&
               std::all_of(out.torsion_free.begin(), out.torsion_free.end(), [](bool b) { return b; });
  return out;
}

ConnectedGradedVerdict connected_graded_check(const Reductor& r) {
  if (!r.graded()) throw PreconditionError("connected_graded_check needs a graded presentation");
  if (r.dim(0) != 1) throw PreconditionError("R_0 must be K");
  const ValuedField& f = r.field();
  const Presentation& p = r.presentation();
  ConnectedGradedVerdict out;
  const Lattice whole = r.ambient_lattice(r.max_degree());
  bool all_match = true;
  for (int n = 0; n <= r.max_degree(); ++n) {
    std::vector<Vector> gens;
    for (const auto& w : words_of_degree(p, n)) {
      gens.push_back(r.coordinates(normal_form(p, AlgebraElement::monomial(w, f.one()))));
    }
    const Lattice lambda_n = Lattice::finitely_generated(f, r.ambient_dim(), std::move(gens));
    const std::size_t rn = r.dim(n) - r.dim(n - 1);
    const Lattice meet = intersect_subspace(whole, leading_units(f, r.ambient_dim(), r.dim(n - 1), r.dim(n)));
    const bool match = same_module(lambda_n, meet);
    out.pieces_match.push_back(match);
    all_match = all_match && match;
    if (residue_dim(lambda_n) != rn) out.dims_differ.push_back(n);
    if (n == 1) {
      out.degree_one_residue_dim = residue_dim(lambda_n);
      out.degree_one_dim = rn;
    }
  }
  out.passed = all_match && out.degree_one_residue_dim == out.degree_one_dim;
  return out;
}

CheckOutcome graded_symbols_commute(const Reductor& r) {
  CheckOutcome out{true, {}, 0};
  const std::size_t rank = r.basis().rank();
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const int deg = r.basis_degree(i) + r.basis_degree(j);
      if (deg > r.max_degree()) continue;
      ++out.cases;
      const Vector& x = r.basis().vectors[i];
      const Vector& y = r.basis().vectors[j];
      Vector c = r.multiply(x, y);
      axpy(c, -r.field().one(), r.multiply(y, x));
      for (std::size_t k = r.dim(deg - 1); k < c.size(); ++k) {
        if (!c[k].is_zero()) {
          out.passed = false;
          out.witness = r.presentation().format(r.basis_element(i)) + " and " +
                        r.presentation().format(r.basis_element(j));
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome strategy_independence_check(const Presentation& p, int n) {
  CheckOutcome out{true, {}, 0};
  const FieldElement one = p.field().one();
  for (int d = 0; d <= n; ++d) {
    for (const auto& w : words_of_degree(p, d)) {
      ++out.cases;
      const AlgebraElement raw = AlgebraElement::monomial(w, one);
      if (!(normal_form(p, raw, Strategy::Leftmost) == normal_form(p, raw, Strategy::Rightmost))) {
        out.passed = false;
        out.witness = p.format(w);
        return out;
      }
    }
  }
  return out;
}

}  // namespace valred
