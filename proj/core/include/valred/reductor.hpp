#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valred/freealg.hpp"
#include "valred/lattice.hpp"
#include "valred/linalg.hpp"

namespace valred {

/// Sparse coordinates on Lambda's O_v-basis.
using SparseVector = std::map<std::size_t, FieldElement>;

/// Per-degree summary of F_n Lambda inside F_n A.
struct LayerInfo {
  int degree = 0;
  std::size_t dim = 0;          // dim_K F_nA
  std::size_t rank = 0;         // rank of F_n Lambda
  std::size_t residue_dim = 0;  // dim over k_v of F_n Lambda / m_v F_n Lambda
  bool is_lattice = false;      // K-span of F_n Lambda is F_nA
  bool unramified = false;
  bool nested = false;          // F_n Lambda meets F_{n-1}A exactly in F_{n-1} Lambda
};

/// Lambda = pi(O_v<X>) truncated at degree N. Coordinates are taken on the
/// normal words of degree <= N in degree-then-lex order, so F_nA is the
/// span of the first dim(n) coordinates.
class Reductor {
 public:
  const Presentation& presentation() const noexcept { return pres_; }
  const ValuedField& field() const noexcept { return pres_.field(); }
  int max_degree() const noexcept { return max_degree_; }
  bool graded() const noexcept { return pres_.mode() == FiltrationMode::Graded; }

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t ambient_dim() const noexcept { return words_.size(); }
  /// dim_K F_nA.
  std::size_t dim(int n) const;
  const std::vector<LayerInfo>& layers() const noexcept { return layers_; }
  /// O_v-basis of F_n Lambda, vectors of length ambient_dim().
  const TriangularBasis& layer_basis(int n) const;
  /// F_n Lambda as a lattice in F_nA (coordinates truncated to dim(n)).
  Lattice layer_lattice(int n) const;
  /// F_n Lambda with full-length coordinates.
  Lattice ambient_lattice(int n) const;
  /// Basis of F_N Lambda; every layer basis is a prefix when all layers nest.
  const TriangularBasis& basis() const { return layer_basis(max_degree_); }
  /// Filtration degree of basis element i: the first layer containing it.
  int basis_degree(std::size_t i) const { return basis_degrees_.at(i); }
  AlgebraElement basis_element(std::size_t i) const { return element(basis().vectors.at(i)); }
  bool all_nested() const;

  /// Coordinates of a normalized element; DegreeOverflowError past N.
  Vector coordinates(const AlgebraElement& a) const;
  AlgebraElement element(const Vector& v) const;
  /// Product in coordinates; DegreeOverflowError when degrees exceed N.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Normal form of u*v for word indices u, v.
  const Vector& word_product(std::size_t u, std::size_t v) const;
  /// Coordinates on basis(); nullopt outside F_NA's span.
  SparseVector lambda_coordinates(const Vector& v) const;
  Vector from_lambda(const SparseVector& c) const;
  /// b_i * b_j on Lambda's basis, for basis_degree(i) + basis_degree(j) <= N.
  const SparseVector& basis_product(std::size_t i, std::size_t j) const;
  SparseVector multiply_lambda(const SparseVector& a, const SparseVector& b) const;

 private:
  friend Reductor build_reductor(const Presentation& p, int n);
  explicit Reductor(Presentation p) : pres_(std::move(p)) {}

  Presentation pres_;
  int max_degree_ = 0;
  std::vector<Word> words_;
  std::map<Word, std::size_t> word_index_;
  std::vector<std::size_t> dims_;
  std::vector<TriangularBasis> layer_bases_;
  std::vector<LayerInfo> layers_;
  std::vector<int> basis_degrees_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> word_table_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> basis_table_;
};

/// Builds F_n Lambda = O_v-span of the normal forms of all words of degree
/// <= n, for n = 0..N. Throws CoefficientEscape at the first degree where
/// a normal form of a word has a coefficient outside O_v.
Reductor build_reductor(const Presentation& p, int n);

/// Per-degree unramified flags of F_n Lambda in F_nA, plus Lambda meet R_n
/// in R_n for graded presentations.
struct UnramifiedReport {
  std::vector<bool> filtered;
  std::vector<bool> graded;
  bool all() const;
};
UnramifiedReport check_unramified(const Reductor& r);
/// Unramified flags for explicit components M_n in spaces of dimension d_n.
std::vector<bool> check_unramified(const std::vector<Lattice>& components,
                                   const std::vector<std::size_t>& dims);

/// Lambda / m_v Lambda as structure constants over k_v.
struct Reduction {
  std::uint32_t residue_modulus = 0;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  /// (i, j) -> residue coordinates of b_i b_j, for degree sums <= N.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ResidueElement>> table;
  bool associative = false;

  std::vector<ResidueElement> product(const std::vector<ResidueElement>& a,
                                      const std::vector<ResidueElement>& b) const;
  /// "xi * xi = xi" rendering of one table entry.
  std::string describe(std::size_t i, std::size_t j) const;
  std::vector<std::string> describe() const;
};
/// PreconditionError unless every layer is unramified.
Reduction reduction(const Reductor& r);

/// v_F(a) = min v of the coordinates of a on Lambda's basis.
GroupElement value_function(const Reductor& r, const Vector& a);
GroupElement value_function(const Reductor& r, const AlgebraElement& a);

struct Symbol {
  GroupElement degree;  // -v_F(a)
  std::vector<ResidueElement> residue;
  AlgebraElement representative;
};
/// DomainError for a = 0.
Symbol principal_symbol(const Reductor& r, const AlgebraElement& a);
Symbol principal_symbol(const Reductor& r, const Vector& a);

/// Homogeneous component gamma of G_v(A): the classes of t_{-gamma} b_i.
struct GradedPiece {
  GroupElement degree;
  std::vector<AlgebraElement> basis;
};
GradedPiece assoc_graded_piece(const Reductor& r, const GroupElement& gamma);

struct CheckOutcome {
  bool passed = false;
  std::string witness;
  std::size_t cases = 0;
};

/// Multiplication by sigma(t_gamma) maps G_v(A)_gamma onto G_v(A)_0, and
/// homogeneous products transport to products in the reduction.
CheckOutcome crossed_product_check(const Reductor& r, const std::vector<GroupElement>& gammas,
                                   int pair_degree = 2);

/// Deterministic element pool: coefficient pool times normal words of
/// degree <= max_degree, single terms then two-term sums. A seed appends
/// random three-term elements.
std::vector<AlgebraElement> element_pool(const Reductor& r, int max_degree = 2,
                                         std::optional<std::uint64_t> seed = std::nullopt);

struct ValuationVerdict {
  bool is_valuation = false;
  std::size_t pairs_checked = 0;
  /// First violating pair and the rule it breaks.
  std::optional<std::pair<AlgebraElement, AlgebraElement>> counterexample;
  std::string violated;  // "multiplicative" or "ultrametric"
  GroupElement value_a, value_b, value_product;
};
ValuationVerdict valuation_axioms_check(const Reductor& r, const std::vector<AlgebraElement>& pool);
ValuationVerdict valuation_axioms_check(const Reductor& r);

/// Structural reason for the reduction to be a domain, when one is known:
/// every pair of generators x_j > x_i has exactly one rule
/// x_j x_i = c x_i x_j + (lower degree) with c a unit of O_v, and Lambda is
/// unramified. Then G(reduction) is a quantum affine space over k_v.
std::optional<std::string> domain_certificate(const Reductor& r);

/// v_F(a) - v_F(b). PreconditionError unless the verdict is a valuation;
/// DomainError for b = 0.
GroupElement fraction_value(const Reductor& r, const ValuationVerdict& verdict,
                            const AlgebraElement& a, const AlgebraElement& b);

/// F^v_gamma A * F^v_delta A = F^v_{gamma+delta} A on basis elements.
bool strong_filtration_check(const Reductor& r, const GroupElement& gamma,
                             const GroupElement& delta);

/// m_v F_j Lambda meet F_i Lambda = m_v F_i Lambda for i <= j <= max_n, and
/// (f^v_gamma K) Lambda meet F_nA = (f^v_gamma K) F_n Lambda.
CheckOutcome lemma_identities_check(const Reductor& r, int max_n,
                                    const std::vector<GroupElement>& gammas);

/// Lambda' = Lambda meet A' for the subalgebra A' generated by gens.
struct SubReductor {
  std::vector<std::size_t> dims;  // dim_K F_nA'
  std::vector<Lattice> layers;    // F_n Lambda', ambient coordinates
  std::vector<bool> unramified;
  int product_length = 0;         // length at which the spans stabilized
};
/// InconclusiveError when products of gens do not stabilize.
SubReductor subalgebra_reductor(const Reductor& r, const std::vector<AlgebraElement>& gens, int n);

struct TensorReductor {
  Reductor reductor;
  /// F_n Lambda equals sum over i+j=n of F_i Lambda (x) F_j Lambda'.
  bool matches_tensor_filtration = false;
  bool unramified = false;
};
TensorReductor tensor_reductor(const Reductor& a, const Reductor& b, int n);

struct ValuationRingVerdict {
  bool residue_is_field = false;
  bool valuation_ring = false;
  /// The pool agreed with the verdict.
  bool consistent = false;
  std::string minimal_polynomial;  // of the reduction, e.g. "T^2 - T"
  std::optional<AlgebraElement> witness;
};
/// Commutative finite-dimensional A = K or K[xi]/(xi^2 - a xi - b).
/// UnsupportedError for any other shape; PreconditionError when A is not a field.
ValuationRingVerdict valuation_ring_check(const Reductor& r);

struct ConnectionVerdict {
  std::vector<bool> filtered;  // (a) F_n Lambda unramified in F_nA
  std::vector<bool> graded;    // (b) G_F(Lambda)_n unramified in G_F(A)_n
  std::vector<bool> rees;      // (c) Rees pieces unramified, inclusions injective
  std::vector<bool> torsion_free;
  bool agree = false;
  bool passed = false;
};
ConnectionVerdict connection_check(const Reductor& r);

struct ConnectedGradedVerdict {
  std::vector<bool> pieces_match;  // Lambda_n = Lambda meet R_n
  std::size_t degree_one_residue_dim = 0;
  std::size_t degree_one_dim = 0;
  /// Degrees where dim_K R_n differs from the residue dimension of Lambda_n.
  std::vector<int> dims_differ;
  bool passed = false;
};
/// PreconditionError unless the presentation is graded with R_0 = K.
ConnectedGradedVerdict connected_graded_check(const Reductor& r);

/// Symbols of normal words commute in G_F(A): uv - vu drops filtration degree.
CheckOutcome graded_symbols_commute(const Reductor& r);

/// Leftmost and rightmost rewriting agree on every word of degree <= n.
CheckOutcome strategy_independence_check(const Presentation& p, int n);

}  // namespace valred
