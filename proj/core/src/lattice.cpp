#include "valred/lattice.hpp"

#include "valred/errors.hpp"

namespace valred {

namespace {

void require_fg(const Lattice& m, const char* op) {
  if (!m.is_finitely_generated()) {
    throw UnsupportedError(std::string(op) + " needs a finitely generated lattice");
  }
}

// Coefficients of x on independent directions, via RREF of [d_i | e_i].
std::optional<std::vector<FieldElement>> express(const ValuedField& f, std::size_t dim,
                                                 const std::vector<Vector>& dirs, const Vector& x) {
  const std::size_t k = dirs.size();
  std::vector<Vector> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vector r = dirs[i];
    for (std::size_t j = 0; j < k; ++j) r.push_back(i == j ? f.one() : f.zero());
    rows.push_back(std::move(r));
  }
  Subspace s(f, dim + k, rows);
  Vector probe = x;
  for (std::size_t j = 0; j < k; ++j) probe.push_back(f.zero());
  Vector r = s.reduce(probe);
  for (std::size_t c = 0; c < dim; ++c) {
    if (!r[c].is_zero()) return std::nullopt;
  }
  std::vector<FieldElement> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) out.push_back(-r[dim + j]);
  return out;
}

}  // namespace

bool Cut::contains(const ValuedField& f, const FieldElement& x) const {
  if (x.is_zero()) return true;
  const GroupElement v = f.value(x);
  if (kind == Kind::Principal) return v >= gamma;
  if (v.rank() != 2) throw DimensionError("limit cuts need a rank 2 value group");
  return v[0] >= bound;
}

std::string Cut::to_string() const {
  if (kind == Kind::Principal) return "Principal(" + gamma.to_string() + ")";
  return "Limit(" + std::to_string(bound) + ")";
}

Lattice::Lattice(ValuedField f, std::size_t dim, std::string label)
    : field_(std::move(f)), dim_(dim), label_(std::move(label)) {}

Lattice Lattice::finitely_generated(const ValuedField& f, std::size_t dim, std::vector<Vector> gens,
                                    std::string label) {
  Lattice m(f, dim, std::move(label));
  for (const auto& g : gens) {
    if (g.size() != dim) throw DimensionError("generator length does not match ambient dimension");
  }
  m.gens_ = std::move(gens);
  m.basis_ = echelon(f, m.gens_, ColumnRange{0, dim}).pivot_rows;
  return m;
}

Lattice Lattice::ideal_sum(const ValuedField& f, std::size_t dim,
                           std::vector<std::pair<Cut, Vector>> summands, std::string label) {
  Lattice m(f, dim, std::move(label));
  m.fg_ = false;
  std::vector<Vector> dirs;
  for (const auto& [cut, d] : summands) {
    if (d.size() != dim) throw DimensionError("direction length does not match ambient dimension");
    if (cut.kind == Cut::Kind::Limit && f.rank() != 2) {
      throw DimensionError("limit cuts need a rank 2 value group");
    }
    dirs.push_back(d);
  }
  if (valred::span_dim(f, dim, dirs) != dirs.size()) {
    throw RankError("ideal sum directions are linearly dependent");
  }
  m.summands_ = std::move(summands);
  return m;
}

const std::vector<Vector>& Lattice::generators() const {
  require_fg(*this, "generators");
  return gens_;
}

const TriangularBasis& Lattice::basis() const {
  require_fg(*this, "basis");
  return basis_;
}

std::size_t Lattice::rank() const {
  require_fg(*this, "rank");
  return basis_.rank();
}

const std::vector<std::pair<Cut, Vector>>& Lattice::summands() const {
  if (fg_) throw UnsupportedError("summands needs an ideal sum lattice");
  return summands_;
}

std::size_t Lattice::span_dim() const { return fg_ ? basis_.rank() : summands_.size(); }

std::vector<Vector> triangularize(const Lattice& m) {
  require_fg(m, "triangularize");
  std::vector<Vector> out;
  for (std::size_t idx : m.basis().order) out.push_back(m.basis().vectors[idx]);
  return out;
}

std::size_t residue_dim(const Lattice& m) {
  if (m.is_finitely_generated()) return m.rank();
  std::size_t n = 0;
  for (const auto& [cut, d] : m.summands()) {
    if (cut.kind == Cut::Kind::Principal) ++n;
  }
  return n;
}

bool is_unramified(const Lattice& m, std::size_t v_dim) {
  if (m.span_dim() != v_dim) {
    throw NotALatticeError("K-span has dimension " + std::to_string(m.span_dim()) + ", expected " +
                           std::to_string(v_dim));
  }
  return residue_dim(m) == v_dim;
}

std::vector<Vector> lift_residue_basis(const Lattice& m,
                                       const std::vector<std::vector<ResidueElement>>& residues) {
  require_fg(m, "lift_residue_basis");
  const std::size_t r = m.rank();
  if (residues.size() != r) throw RankError("residue family has the wrong size");
  for (const auto& row : residues) {
    if (row.size() != r) throw DimensionError("residue vector length does not match rank");
  }
  if (matrix_rank(residues) != r) throw RankError("residue vectors are linearly dependent");
  const ValuedField& f = m.field();
  std::vector<Vector> out;
  for (const auto& row : residues) {
    Vector x = zero_vector(f, m.ambient_dim());
    for (std::size_t i = 0; i < r; ++i) {
      if (!row[i].is_zero()) axpy(x, f.lift(row[i]), m.basis().vectors[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<FieldElement>> coordinates(const Vector& x, const Lattice& m) {
  require_fg(m, "coordinates");
  if (x.size() != m.ambient_dim()) throw DimensionError("vector length does not match lattice");
  return solve(m.basis(), x);
}

bool member(const Vector& x, const Lattice& m) {
  const ValuedField& f = m.field();
  if (m.is_finitely_generated()) {
    auto c = coordinates(x, m);
    if (!c) return false;
    for (const auto& a : *c) {
      if (!f.is_integral(a)) return false;
    }
    return true;
  }
  if (x.size() != m.ambient_dim()) throw DimensionError("vector length does not match lattice");
  std::vector<Vector> dirs;
  for (const auto& s : m.summands()) dirs.push_back(s.second);
  auto c = express(f, m.ambient_dim(), dirs, x);
  if (!c) return false;
  for (std::size_t i = 0; i < c->size(); ++i) {
    if (!m.summands()[i].first.contains(f, (*c)[i])) return false;
  }
  return true;
}

Lattice quotient_lattice(const Lattice& m, const std::vector<Vector>& subspace) {
  require_fg(m, "quotient_lattice");
  const ValuedField& f = m.field();
  Subspace s(f, m.ambient_dim(), subspace);
  std::vector<Vector> gens;
  for (const auto& b : m.basis().vectors) gens.push_back(s.project_quotient(b));
  return Lattice::finitely_generated(f, m.ambient_dim() - s.dim(), std::move(gens),
                                     m.label().empty() ? std::string{} : m.label() + "/V'");
}

GroupElement module_value(const Vector& x, const Lattice& m) {
  auto c = coordinates(x, m);
  if (!c) throw DomainError("vector is outside the K-span of the lattice");
  GroupElement best = GroupElement::infinity();
  for (const auto& a : *c) {
    if (!a.is_zero()) best = min(best, m.field().value(a));
  }
  return best;
}

Lattice intersect_subspace(const Lattice& m, const std::vector<Vector>& subspace) {
  require_fg(m, "intersect_subspace");
  const ValuedField& f = m.field();
  Subspace s(f, m.ambient_dim(), subspace);
  const std::size_t q = m.ambient_dim() - s.dim();
  std::vector<Vector> rows;
  for (const auto& b : m.basis().vectors) {
    Vector r = s.project_quotient(b);
    r.insert(r.end(), b.begin(), b.end());
    rows.push_back(std::move(r));
  }
  EchelonResult e = echelon(f, std::move(rows), ColumnRange{0, q});
  std::vector<Vector> gens;
  for (auto& r : e.rest) gens.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(q), r.end());
  return Lattice::finitely_generated(f, m.ambient_dim(), std::move(gens), m.label());
}

Lattice scale(const Lattice& m, const FieldElement& x) {
  require_fg(m, "scale");
  std::vector<Vector> gens;
  for (const auto& b : m.basis().vectors) gens.push_back(scaled(b, x));
  return Lattice::finitely_generated(m.field(), m.ambient_dim(), std::move(gens), m.label());
}

bool contains_module(const Lattice& outer, const Lattice& inner) {
  require_fg(inner, "contains_module");
  for (const auto& b : inner.basis().vectors) {
    if (!member(b, outer)) return false;
  }
  return true;
}

bool same_module(const Lattice& a, const Lattice& b) {
  return contains_module(a, b) && contains_module(b, a);
}

}  // namespace valred
