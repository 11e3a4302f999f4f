#include "valred/ordered_group.hpp"

#include <cctype>
#include <vector>

#include "valred/errors.hpp"

namespace valred {

GroupElement::GroupElement(std::initializer_list<std::int64_t> coords) {
  if (coords.size() == 0 || coords.size() > kMaxRank) {
    throw DimensionError("group elements have rank 1 or 2");
  }
  rank_ = static_cast<int>(coords.size());
  std::size_t i = 0;
  for (auto c : coords) coords_[i++] = c;
}

GroupElement GroupElement::zero(int rank) {
  if (rank < 1 || rank > kMaxRank) throw DimensionError("group elements have rank 1 or 2");
  GroupElement g;
  g.rank_ = rank;
  return g;
}

GroupElement GroupElement::infinity() {
  GroupElement g;
  g.rank_ = 0;
  g.infinite_ = true;
  return g;
}

GroupElement GroupElement::unit(int rank, int i) {
  GroupElement g = zero(rank);
  if (i < 0 || i >= rank) throw DimensionError("unit index out of range");
  g.coords_[static_cast<std::size_t>(i)] = 1;
  return g;
}

GroupElement GroupElement::smallest_positive(int rank) { return unit(rank, rank - 1); }

GroupElement GroupElement::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "inf" || s == "Infinity" || s == "infinity") return infinity();
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
    throw DomainError("malformed group element '" + text + "'");
  }
  std::vector<std::int64_t> parts;
  std::size_t start = 1;
  while (start < s.size() - 1) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size() - 1;
    try {
      std::size_t used = 0;
      const std::string piece = s.substr(start, end - start);
      parts.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw DomainError("trailing characters");
    } catch (const std::logic_error&) {
      throw DomainError("malformed group element '" + text + "'");
    }
    start = end + 1;
  }
  if (parts.size() == 1) return GroupElement{parts[0]};
  if (parts.size() == 2) return GroupElement{parts[0], parts[1]};
  throw DimensionError("group elements have rank 1 or 2");
}

std::string GroupElement::to_string() const {
  if (infinite_) return "inf";
  std::string out = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

std::strong_ordering lex_compare(const GroupElement& a, const GroupElement& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.rank() != b.rank()) {
    throw DimensionError("cannot compare " + a.to_string() + " with " + b.to_string());
  }
  for (int i = 0; i < a.rank(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupElement& a, const GroupElement& b) { return lex_compare(a, b) == 0; }

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  return lex_compare(a, b);
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  if (a.is_infinite() || b.is_infinite()) return GroupElement::infinity();
  if (a.rank() != b.rank()) {
    throw DimensionError("cannot add " + a.to_string() + " and " + b.to_string());
  }
  if (a.rank() == 1) return GroupElement{a[0] + b[0]};
  return GroupElement{a[0] + b[0], a[1] + b[1]};
}

GroupElement neg(const GroupElement& a) {
  if (a.is_infinite()) throw DomainError("infinity has no inverse");
  if (a.rank() == 1) return GroupElement{-a[0]};
  return GroupElement{-a[0], -a[1]};
}

GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

}  // namespace valred
