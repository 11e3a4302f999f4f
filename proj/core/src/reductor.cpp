#include "valred/reductor.hpp"

#include <algorithm>

#include "valred/errors.hpp"

namespace valred {

namespace {

bool integral_member(const TriangularBasis& basis, const ValuedField& f, const Vector& x) {
  auto c = solve(basis, x);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [&](const FieldElement& a) { return f.is_integral(a); });
}

}  // namespace

std::size_t Reductor::dim(int n) const {
  if (n < 0) return 0;
  if (n > max_degree_) throw DegreeOverflowError("degree " + std::to_string(n) + " exceeds bound");
  return dims_[static_cast<std::size_t>(n)];
}

const TriangularBasis& Reductor::layer_basis(int n) const {
  if (n < 0 || n > max_degree_) {
    throw DegreeOverflowError("degree " + std::to_string(n) + " exceeds bound");
  }
  return layer_bases_[static_cast<std::size_t>(n)];
}

Lattice Reductor::layer_lattice(int n) const {
  const std::size_t d = dim(n);
  std::vector<Vector> gens;
  for (const auto& v : layer_basis(n).vectors) gens.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d));
  return Lattice::finitely_generated(field(), d, std::move(gens), "F_" + std::to_string(n) + "A");
}

Lattice Reductor::ambient_lattice(int n) const {
  return Lattice::finitely_generated(field(), ambient_dim(), layer_basis(n).vectors, "F_NA");
}

bool Reductor::all_nested() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const LayerInfo& l) { return l.nested; });
}

Vector Reductor::coordinates(const AlgebraElement& a) const {
  bool normal = true;
  for (const auto& [w, c] : a.terms()) {
    if (w.degree > max_degree_) {
      throw DegreeOverflowError("element of degree " + std::to_string(w.degree) +
                                " exceeds bound " + std::to_string(max_degree_));
    }
    if (!word_index_.count(w)) normal = false;
  }
  if (!normal) return coordinates(normal_form(pres_, a));
  Vector v = zero_vector(field(), ambient_dim());
  for (const auto& [w, c] : a.terms()) v[word_index_.at(w)] = c;
  return v;
}

AlgebraElement Reductor::element(const Vector& v) const {
  AlgebraElement a;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) a.add_term(words_.at(i), v[i]);
  }
  return a;
}

const Vector& Reductor::word_product(std::size_t u, std::size_t v) const {
  auto it = word_table_.find({u, v});
  if (it == word_table_.end()) {
    throw DegreeOverflowError("product of " + pres_.format(words_.at(u)) + " and " +
                              pres_.format(words_.at(v)) + " exceeds degree bound");
  }
  return it->second;
}

Vector Reductor::multiply(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(field(), ambient_dim());
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u].is_zero()) continue;
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b[v].is_zero()) continue;
      axpy(out, a[u] * b[v], word_product(u, v));
    }
  }
  return out;
}

SparseVector Reductor::lambda_coordinates(const Vector& v) const {
  auto c = solve(basis(), v);
  if (!c) throw DomainError("vector is outside the span of F_N Lambda");
  SparseVector out;
  for (std::size_t i = 0; i < c->size(); ++i) {
    if (!(*c)[i].is_zero()) out.emplace(i, (*c)[i]);
  }
  return out;
}

Vector Reductor::from_lambda(const SparseVector& c) const {
  Vector out = zero_vector(field(), ambient_dim());
  for (const auto& [i, a] : c) axpy(out, a, basis().vectors.at(i));
  return out;
}

const SparseVector& Reductor::basis_product(std::size_t i, std::size_t j) const {
  auto it = basis_table_.find({i, j});
  if (it == basis_table_.end()) {
    throw DegreeOverflowError("basis product exceeds degree bound");
  }
  return it->second;
}

SparseVector Reductor::multiply_lambda(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const FieldElement xy = x * y;
      for (const auto& [k, z] : basis_product(i, j)) {
        auto [it, inserted] = out.emplace(k, xy * z);
        if (!inserted) {
          it->second += xy * z;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

Reductor build_reductor(const Presentation& p, int n) {
  if (n < 0) throw PreconditionError("degree bound must be non-negative");
  Reductor r(p);
  r.max_degree_ = n;
  const ValuedField& f = p.field();

  if (p.mode() == FiltrationMode::Filtered) {
    r.words_ = filtration_basis(p, n);
  } else {
    for (int d = 0; d <= n; ++d) {
      auto piece = filtration_basis(p, d);
      r.words_.insert(r.words_.end(), piece.begin(), piece.end());
    }
  }
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.word_index_.emplace(r.words_[i], i);
  const std::size_t total = r.words_.size();
  for (int d = 0; d <= n; ++d) {
    r.dims_.push_back(static_cast<std::size_t>(
        std::count_if(r.words_.begin(), r.words_.end(), [&](const Word& w) { return w.degree <= d; })));
  }

  auto to_vector = [&](const AlgebraElement& a) {
    Vector v = zero_vector(f, total);
    for (const auto& [w, c] : a.terms()) v[r.word_index_.at(w)] = c;
    return v;
  };

  TriangularBasis prev;
  for (int d = 0; d <= n; ++d) {
    auto new_words = words_of_degree(p, d);
    std::stable_partition(new_words.begin(), new_words.end(),
                          [&](const Word& w) { return is_irreducible(p, w); });
    std::vector<Vector> rows;
    for (const auto& w : new_words) {
      AlgebraElement nf = normal_form(p, AlgebraElement::monomial(w, f.one()));
      for (const auto& [nw, c] : nf.terms()) {
        if (!f.is_integral(c)) throw CoefficientEscape(d, p.format(w));
      }
      rows.push_back(to_vector(nf));
    }
    const std::size_t lo = d == 0 ? 0 : r.dims_[static_cast<std::size_t>(d - 1)];
    const std::size_t hi = r.dims_[static_cast<std::size_t>(d)];
    EchelonResult e = echelon(f, rows, ColumnRange{lo, hi});
    bool nested = std::all_of(e.rest.begin(), e.rest.end(),
                              [&](const Vector& v) { return integral_member(prev, f, v); });
    TriangularBasis layer;
    if (nested) {
      for (std::size_t idx : e.pivot_rows.order) {
        layer.vectors.push_back(e.pivot_rows.vectors[idx]);
        layer.pivots.push_back(e.pivot_rows.pivots[idx]);
      }
      const std::size_t top = layer.vectors.size();
      for (std::size_t i = 0; i < prev.rank(); ++i) {
        layer.vectors.push_back(prev.vectors[i]);
        layer.pivots.push_back(prev.pivots[i]);
      }
      // Stored order keeps the previous layer as a prefix of the vectors.
      std::rotate(layer.vectors.begin(), layer.vectors.begin() + static_cast<std::ptrdiff_t>(top),
                  layer.vectors.end());
      std::rotate(layer.pivots.begin(), layer.pivots.begin() + static_cast<std::ptrdiff_t>(top),
                  layer.pivots.end());
      for (std::size_t i = 0; i < top; ++i) layer.order.push_back(prev.rank() + i);
      for (std::size_t idx : prev.order) layer.order.push_back(idx);
    } else {
      std::vector<Vector> all = prev.vectors;
      all.insert(all.end(), rows.begin(), rows.end());
      layer = echelon(f, std::move(all), ColumnRange{0, hi}).pivot_rows;
    }
    LayerInfo info;
    info.degree = d;
    info.dim = hi;
    info.rank = layer.rank();
    info.residue_dim = layer.rank();
    info.is_lattice = layer.rank() == hi;
    info.unramified = info.is_lattice && info.residue_dim == hi;
    info.nested = nested;
    r.layers_.push_back(info);
    r.layer_bases_.push_back(layer);
    prev = std::move(layer);
  }

  const TriangularBasis& top = r.layer_bases_.back();
  for (const auto& v : top.vectors) {
    int deg = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) deg = std::max(deg, r.words_[i].degree);
    }
    r.basis_degrees_.push_back(deg);
  }

  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t v = 0; v < total; ++v) {
      if (r.words_[u].degree + r.words_[v].degree > n) continue;
      AlgebraElement prod = normal_form(
          p, AlgebraElement::monomial(concat(r.words_[u], r.words_[v]), f.one()));
      r.word_table_.emplace(std::make_pair(u, v), to_vector(prod));
    }
  }
  for (std::size_t i = 0; i < top.rank(); ++i) {
    for (std::size_t j = 0; j < top.rank(); ++j) {
      if (r.basis_degrees_[i] + r.basis_degrees_[j] > n) continue;
      r.basis_table_.emplace(std::make_pair(i, j),
                             r.lambda_coordinates(r.multiply(top.vectors[i], top.vectors[j])));
    }
  }
  return r;
}

bool UnramifiedReport::all() const {
  return std::all_of(filtered.begin(), filtered.end(), [](bool b) { return b; }) &&
         std::all_of(graded.begin(), graded.end(), [](bool b) { return b; });
}

UnramifiedReport check_unramified(const Reductor& r) {
  UnramifiedReport out;
  const ValuedField& f = r.field();
  for (int n = 0; n <= r.max_degree(); ++n) {
    const Lattice m = r.layer_lattice(n);
    out.filtered.push_back(m.span_dim() == r.dim(n) && is_unramified(m, r.dim(n)));
    if (!r.graded()) continue;
    std::vector<Vector> piece;
    for (std::size_t i = r.dim(n - 1); i < r.dim(n); ++i) piece.push_back(unit_vector(f, r.ambient_dim(), i));
    const Lattice meet = intersect_subspace(r.ambient_lattice(r.max_degree()), piece);
    const std::size_t d = r.dim(n) - r.dim(n - 1);
    out.graded.push_back(meet.span_dim() == d && is_unramified(meet, d));
  }
  return out;
}

std::vector<bool> check_unramified(const std::vector<Lattice>& components,
                                   const std::vector<std::size_t>& dims) {
  if (components.size() != dims.size()) throw DimensionError("one dimension per component");
  std::vector<bool> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    out.push_back(components[i].span_dim() == dims[i] && is_unramified(components[i], dims[i]));
  }
  return out;
}

std::vector<ResidueElement> Reduction::product(const std::vector<ResidueElement>& a,
                                               const std::vector<ResidueElement>& b) const {
  std::vector<ResidueElement> out(labels.size(), ResidueElement(0, residue_modulus));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      auto it = table.find({i, j});
      if (it == table.end()) throw DegreeOverflowError("reduction product exceeds degree bound");
      const ResidueElement ab = a[i] * b[j];
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += ab * it->second[k];
    }
  }
  return out;
}

std::string Reduction::describe(std::size_t i, std::size_t j) const {
  const auto& c = table.at({i, j});
  std::string rhs;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const std::string coeff = c[k].to_string();
    std::string term;
    if (coeff == "1") {
      term = labels[k];
    } else if (labels[k] == "1") {
      term = coeff;
    } else {
      term = coeff + "*" + labels[k];
    }
    rhs += rhs.empty() ? term : " + " + term;
  }
  return labels[i] + " * " + labels[j] + " = " + (rhs.empty() ? "0" : rhs);
}

std::vector<std::string> Reduction::describe() const {
  std::vector<std::string> lines;
  for (const auto& entry : table) lines.push_back(describe(entry.first.first, entry.first.second));
  return lines;
}

Reduction reduction(const Reductor& r) {
  for (const auto& l : r.layers()) {
    if (!l.unramified) {
      throw PreconditionError("reduction needs an unramified reductor; degree " +
                              std::to_string(l.degree) + " is not");
    }
  }
  const ValuedField& f = r.field();
  Reduction red;
  red.residue_modulus = f.residue_modulus();
  const std::size_t rank = r.basis().rank();
  for (std::size_t i = 0; i < rank; ++i) {
    red.labels.push_back(r.presentation().format(r.basis_element(i)));
    red.degrees.push_back(r.basis_degree(i));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (red.degrees[i] + red.degrees[j] > r.max_degree()) continue;
      std::vector<ResidueElement> row(rank, ResidueElement(0, red.residue_modulus));
      for (const auto& [k, c] : r.basis_product(i, j)) row[k] = f.residue(c);
      red.table.emplace(std::make_pair(i, j), std::move(row));
    }
  }
  red.associative = true;
  auto unit = [&](std::size_t i) {
    std::vector<ResidueElement> e(rank, ResidueElement(0, red.residue_modulus));
    e[i] = ResidueElement(1, red.residue_modulus);
    return e;
  };
  for (std::size_t i = 0; i < rank && red.associative; ++i) {
    for (std::size_t j = 0; j < rank && red.associative; ++j) {
      for (std::size_t k = 0; k < rank; ++k) {
        if (red.degrees[i] + red.degrees[j] + red.degrees[k] > r.max_degree()) continue;
        if (!(red.product(red.product(unit(i), unit(j)), unit(k)) ==
              red.product(unit(i), red.product(unit(j), unit(k))))) {
          red.associative = false;
          break;
        }
      }
    }
  }
  return red;
}

namespace {

GroupElement min_value(const ValuedField& f, const SparseVector& c) {
  GroupElement best = GroupElement::infinity();
  for (const auto& [i, a] : c) best = min(best, f.value(a));
  return best;
}

}  // namespace

GroupElement value_function(const Reductor& r, const Vector& a) {
  return min_value(r.field(), r.lambda_coordinates(a));
}

GroupElement value_function(const Reductor& r, const AlgebraElement& a) {
  return value_function(r, r.coordinates(a));
}

Symbol principal_symbol(const Reductor& r, const Vector& a) {
  const ValuedField& f = r.field();
  const SparseVector c = r.lambda_coordinates(a);
  if (c.empty()) throw DomainError("the principal symbol of 0 is undefined");
  const GroupElement v = min_value(f, c);
  const FieldElement t = f.uniformizer_for(v);
  Symbol s{-v, std::vector<ResidueElement>(r.basis().rank(), ResidueElement(0, f.residue_modulus())),
           AlgebraElement{}};
  Vector rep = zero_vector(f, r.ambient_dim());
  for (const auto& [i, x] : c) {
    if (f.value(x) != v) continue;
    s.residue[i] = f.residue(x / t);
    axpy(rep, x, r.basis().vectors[i]);
  }
  s.representative = r.element(rep);
  return s;
}

Symbol principal_symbol(const Reductor& r, const AlgebraElement& a) {
  return principal_symbol(r, r.coordinates(a));
}

GradedPiece assoc_graded_piece(const Reductor& r, const GroupElement& gamma) {
  GradedPiece g{gamma, {}};
  const FieldElement t = r.field().uniformizer_for(-gamma);
  for (std::size_t i = 0; i < r.basis().rank(); ++i) g.basis.push_back(r.basis_element(i).scaled(t));
  return g;
}

}  // namespace valred
