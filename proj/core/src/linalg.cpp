#include "valred/linalg.hpp"

#include <limits>

#include "valred/errors.hpp"

namespace valred {

Vector zero_vector(const ValuedField& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const ValuedField& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const FieldElement& a, const Vector& x) {
  if (a.is_zero()) return;
  if (y.size() != x.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(const Vector& x, const FieldElement& a) {
  Vector r = x;
  for (auto& e : r) {
    if (!e.is_zero()) e *= a;
  }
  return r;
}

void TriangularBasis::append(Vector v, std::size_t pivot) {
  order.push_back(vectors.size());
  vectors.push_back(std::move(v));
  pivots.push_back(pivot);
}

std::optional<std::vector<FieldElement>> solve(const TriangularBasis& basis, const Vector& x) {
  std::vector<FieldElement> coeffs(basis.rank());
  Vector rest = x;
  for (std::size_t idx : basis.order) {
    const Vector& b = basis.vectors[idx];
    const std::size_t c = basis.pivots[idx];
    if (rest.at(c).is_zero()) continue;
    const FieldElement a = rest[c] / b[c];
    coeffs[idx] = a;
    axpy(rest, -a, b);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

EchelonResult echelon(const ValuedField& f, std::vector<Vector> rows, ColumnRange allowed) {
  EchelonResult out;
  std::vector<bool> alive(rows.size(), true);
  std::size_t remaining = rows.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (is_zero(rows[r])) {
      alive[r] = false;
      --remaining;
    }
  }
  while (remaining > 0) {
    std::size_t best_row = rows.size();
    std::size_t best_col = 0;
    GroupElement best_value = GroupElement::infinity();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      for (std::size_t c = allowed.first; c < allowed.last && c < rows[r].size(); ++c) {
        if (rows[r][c].is_zero()) continue;
        GroupElement v = f.value(rows[r][c]);
        if (v < best_value) {
          best_value = v;
          best_row = r;
          best_col = c;
        }
      }
    }
    if (best_row == rows.size()) break;
    Vector pivot_row = std::move(rows[best_row]);
    alive[best_row] = false;
    --remaining;
    const FieldElement unit = f.uniformizer_for(best_value) / pivot_row[best_col];
    if (!unit.is_one()) pivot_row = scaled(pivot_row, unit);
    const FieldElement& pivot = pivot_row[best_col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r][best_col].is_zero()) continue;
      axpy(rows[r], -(rows[r][best_col] / pivot), pivot_row);
      if (is_zero(rows[r])) {
        alive[r] = false;
        --remaining;
      }
    }
    out.pivot_rows.append(std::move(pivot_row), best_col);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (alive[r]) out.rest.push_back(std::move(rows[r]));
  }
  return out;
}

Subspace::Subspace(const ValuedField& f, std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim) {
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw DimensionError("vector length mismatch");
    Vector r = reduce(v);
    std::size_t c = 0;
    while (c < r.size() && r[c].is_zero()) ++c;
    if (c == r.size()) continue;
    r = scaled(r, r[c].inverse());
    for (auto& row : rows_) {
      if (!row[c].is_zero()) axpy(row, -row[c], r);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
  }
  (void)f;
}

Vector Subspace::reduce(Vector x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (!x[c].is_zero()) {
      const FieldElement a = x[c];
      axpy(x, -a, rows_[i]);
    }
  }
  return x;
}

Vector Subspace::project_quotient(const Vector& x) const {
  const Vector r = reduce(x);
  std::vector<bool> is_pivot(ambient_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  Vector out;
  out.reserve(ambient_ - rows_.size());
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) out.push_back(r[c]);
  }
  return out;
}

std::size_t span_dim(const ValuedField& f, std::size_t ambient_dim,
                     const std::vector<Vector>& rows) {
  return Subspace(f, ambient_dim, rows).dim();
}

std::optional<Vector> solve_square(const std::vector<Vector>& a, const Vector& b) {
  const std::size_t n = a.size();
  std::vector<Vector> m = a;
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    const FieldElement inv = m[c][c].inverse();
    for (auto& e : m[c]) e *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const FieldElement factor = m[r][c];
      axpy(m[r], -factor, m[c]);
    }
  }
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n];
  return y;
}

}  // namespace valred
