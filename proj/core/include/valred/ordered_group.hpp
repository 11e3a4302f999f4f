#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace valred {

/// Element of the value group Z^k (k = 1 or 2) under the lexicographic
/// order, or the adjoined value infinity that sits above every finite element.
class GroupElement {
 public:
  static constexpr int kMaxRank = 2;

  /// The zero of Z^1.
  GroupElement() : rank_(1) {}
  GroupElement(std::initializer_list<std::int64_t> coords);
  static GroupElement zero(int rank);
  static GroupElement infinity();
  /// Standard basis vector e_i of Z^rank.
  static GroupElement unit(int rank, int i);
  /// Smallest element strictly greater than zero, (0,...,0,1).
  static GroupElement smallest_positive(int rank);
  /// Parses "(a)", "(a,b)" or "inf".
  static GroupElement parse(const std::string& text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Rank k of the group; 0 for infinity, which is compatible with every rank.
  int rank() const noexcept { return rank_; }
  std::int64_t operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }

  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::array<std::int64_t, kMaxRank> coords_{};
  int rank_ = 1;
  bool infinite_ = false;
};

/// Lexicographic comparison; infinity is greater than every finite element.
/// Throws DimensionError when the two finite operands have different rank.
std::strong_ordering lex_compare(const GroupElement& a, const GroupElement& b);

/// Componentwise sum; infinity absorbs.
GroupElement add(const GroupElement& a, const GroupElement& b);
/// Inverse; DomainError on infinity.
GroupElement neg(const GroupElement& a);
GroupElement sub(const GroupElement& a, const GroupElement& b);

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a) { return neg(a); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return sub(a, b); }

inline const GroupElement& min(const GroupElement& a, const GroupElement& b) {
  return b < a ? b : a;
}

}  // namespace valred
