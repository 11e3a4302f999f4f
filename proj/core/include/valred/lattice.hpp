#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valred/linalg.hpp"
#include "valred/ordered_group.hpp"
#include "valred/valued_field.hpp"

namespace valred {

/// A fractional O_v-ideal of one of two shapes: Principal(gamma) is
/// {x : v(x) >= gamma} = t_gamma O_v, Limit(c) (rank 2 only) is
/// {x : x = 0 or first coordinate of v(x) >= c}, which is not finitely
/// generated and satisfies m_v Limit(c) = Limit(c).
struct Cut {
  enum class Kind { Principal, Limit };

  static Cut principal(const GroupElement& gamma) { return Cut{Kind::Principal, gamma, 0}; }
  static Cut limit(std::int64_t c) { return Cut{Kind::Limit, GroupElement::infinity(), c}; }

  bool contains(const ValuedField& f, const FieldElement& x) const;
  std::string to_string() const;

  Kind kind;
  GroupElement gamma;
  std::int64_t bound;
};

/// O_v-submodule of K^d, coordinates relative to a labeled K-basis.
class Lattice {
 public:
  /// O_v-span of the generators; triangularized on construction.
  static Lattice finitely_generated(const ValuedField& f, std::size_t dim, std::vector<Vector> gens,
                                    std::string label = {});
  /// Direct sum of cut_i * direction_i; directions must be independent.
  static Lattice ideal_sum(const ValuedField& f, std::size_t dim,
                           std::vector<std::pair<Cut, Vector>> summands, std::string label = {});

  bool is_finitely_generated() const noexcept { return fg_; }
  const ValuedField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

  /// FG only.
  const std::vector<Vector>& generators() const;
  const TriangularBasis& basis() const;
  std::size_t rank() const;

  /// IdealSum only.
  const std::vector<std::pair<Cut, Vector>>& summands() const;

  /// Dimension of the K-span.
  std::size_t span_dim() const;

 private:
  Lattice(ValuedField f, std::size_t dim, std::string label);

  ValuedField field_;
  std::size_t dim_;
  std::string label_;
  bool fg_ = true;
  std::vector<Vector> gens_;
  TriangularBasis basis_;
  std::vector<std::pair<Cut, Vector>> summands_;
};

/// O_v-basis of an FG lattice, in elimination order.
std::vector<Vector> triangularize(const Lattice& m);

/// dim over k_v of M / m_v M.
std::size_t residue_dim(const Lattice& m);

/// residue_dim(M) == v_dim. NotALatticeError when the K-span of M is not
/// v_dim-dimensional.
bool is_unramified(const Lattice& m, std::size_t v_dim);

/// Lifts residue vectors, given as coordinates on the triangular basis of
/// M, to an O_v-basis of M. RankError unless they form a k_v-basis.
std::vector<Vector> lift_residue_basis(const Lattice& m,
                                       const std::vector<std::vector<ResidueElement>>& residues);

bool member(const Vector& x, const Lattice& m);

/// Coefficients of x on the triangular basis of an FG lattice, or nullopt
/// when x is outside the K-span.
std::optional<std::vector<FieldElement>> coordinates(const Vector& x, const Lattice& m);

/// Image of M in V / V', in coordinates on the non-pivot columns of V'.
Lattice quotient_lattice(const Lattice& m, const std::vector<Vector>& subspace);

/// min_i v(a_i) for x = sum a_i x_i on the triangular basis; infinity for 0.
/// DomainError when x is outside the K-span.
GroupElement module_value(const Vector& x, const Lattice& m);

/// M intersected with the K-subspace V', in ambient coordinates.
Lattice intersect_subspace(const Lattice& m, const std::vector<Vector>& subspace);

/// x M for a scalar x.
Lattice scale(const Lattice& m, const FieldElement& x);

/// Mutual membership of bases.
bool same_module(const Lattice& a, const Lattice& b);
bool contains_module(const Lattice& outer, const Lattice& inner);

}  // namespace valred
