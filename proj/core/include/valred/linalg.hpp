#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "valred/field_element.hpp"
#include "valred/valued_field.hpp"

namespace valred {

/// Coordinate vector over K relative to an explicitly labeled K-basis.
using Vector = std::vector<FieldElement>;

Vector zero_vector(const ValuedField& f, std::size_t n);
Vector unit_vector(const ValuedField& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const FieldElement& a, const Vector& x);  // y += a*x
Vector scaled(const Vector& x, const FieldElement& a);

/// Half-open column range [first, last).
struct ColumnRange {
  std::size_t first = 0;
  std::size_t last = 0;
  bool contains(std::size_t c) const noexcept { return c >= first && c < last; }
};

/// O_v-basis in triangular form. Every vector has a pivot column, and in
/// elimination order each vector vanishes at the pivots of the vectors
/// before it, so coordinates are found by forward substitution.
struct TriangularBasis {
  std::vector<Vector> vectors;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> order;

  std::size_t rank() const noexcept { return vectors.size(); }
  void append(Vector v, std::size_t pivot);
};

/// Coefficients of x on the basis (indexed like basis.vectors), or nullopt
/// when x is outside the K-span.
std::optional<std::vector<FieldElement>> solve(const TriangularBasis& basis, const Vector& x);

struct EchelonResult {
  TriangularBasis pivot_rows;
  /// Non-zero leftover rows; they vanish on the allowed columns and together
  /// with pivot_rows generate the same O_v-module as the input.
  std::vector<Vector> rest;
};

/// O_v-unimodular elimination restricted to `allowed` columns. Repeatedly
/// picks the allowed entry of minimal valuation among the remaining rows
/// (ties: lowest row, then lowest column), rescales its row by a unit so
/// the pivot is a uniformizer power, and clears its column from the other
/// remaining rows with O_v multipliers.
EchelonResult echelon(const ValuedField& f, std::vector<Vector> rows, ColumnRange allowed);

/// K-subspace stored in reduced row echelon form.
class Subspace {
 public:
  Subspace(const ValuedField& f, std::size_t ambient_dim, const std::vector<Vector>& spanning);
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// x minus its component along the pivot columns; zero iff x is in the subspace.
  Vector reduce(Vector x) const;
  bool contains(const Vector& x) const { return is_zero(reduce(x)); }
  /// Coordinates of x modulo the subspace on the non-pivot columns, i.e.
  /// the map V -> V/V'.
  Vector project_quotient(const Vector& x) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Dimension of the K-span.
std::size_t span_dim(const ValuedField& f, std::size_t ambient_dim, const std::vector<Vector>& rows);

/// Solves A y = b for square invertible A (rows of A given); nullopt if singular.
std::optional<Vector> solve_square(const std::vector<Vector>& a, const Vector& b);

/// Rank of a matrix over any field type with is_zero, /, *, -.
template <class T>
std::size_t matrix_rank(std::vector<std::vector<T>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const T factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace valred
