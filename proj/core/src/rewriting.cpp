#include <algorithm>
#include <functional>
#include <optional>

#include "valred/errors.hpp"
#include "valred/freealg.hpp"

namespace valred {

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.letters.begin(), lhs.letters.end(),
                    w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
}

struct Redex {
  std::size_t pos;
  const Rule* rule;
};

std::optional<Redex> find_redex(const Presentation& p, const Word& w, Strategy s) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = s == Strategy::Leftmost ? k : n - 1 - k;
    for (const auto& r : p.rules()) {
      if (matches_at(w, pos, r.lhs)) return Redex{pos, &r};
    }
  }
  return std::nullopt;
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& middle) {
  Word out;
  out.letters.reserve(w.size() - len + middle.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
  out.letters.insert(out.letters.end(), middle.letters.begin(), middle.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos + len),
                     w.letters.end());
  return out;
}

// One rewrite of w (with coefficient c) at the given redex.
AlgebraElement apply(const Word& w, const FieldElement& c, const Redex& redex) {
  AlgebraElement out;
  const int outer = w.degree - redex.rule->lhs.degree;
  for (const auto& [rw, rc] : redex.rule->rhs.terms()) {
    Word nw = splice(w, redex.pos, redex.rule->lhs.size(), rw);
    nw.degree = outer + rw.degree;
    out.add_term(nw, c * rc);
  }
  return out;
}

void collect_words(const Presentation& p, Word& current, int max_degree, bool prune,
                   const std::function<void(const Word&)>& emit) {
  emit(current);
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    const int wd = p.weights()[g];
    if (current.degree + wd > max_degree) continue;
    current.letters.push_back(static_cast<std::uint8_t>(g));
    current.degree += wd;
    bool ok = true;
    if (prune) {
      for (const auto& r : p.rules()) {
        if (r.lhs.size() <= current.size() &&
            matches_at(current, current.size() - r.lhs.size(), r.lhs)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) collect_words(p, current, max_degree, prune, emit);
    current.letters.pop_back();
    current.degree -= wd;
  }
}

}  // namespace

AlgebraElement normal_form(const Presentation& p, const AlgebraElement& raw, Strategy strategy,
                           std::size_t step_limit) {
  // Pending words largest first: rewriting only produces smaller words, so
  // each word is popped at most once.
  std::map<Word, FieldElement, std::greater<>> pending(raw.terms().begin(), raw.terms().end());
  AlgebraElement result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const FieldElement& c = node.mapped();
    auto redex = find_redex(p, w, strategy);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > step_limit) {
      throw StepLimitError("normal form needs more than " + std::to_string(step_limit) +
                           " rewrite steps");
    }
    const AlgebraElement step = apply(w, c, *redex);
    for (const auto& [nw, nc] : step.terms()) {
      auto [it, inserted] = pending.emplace(nw, nc);
      if (!inserted) {
        it->second += nc;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

bool is_irreducible(const Presentation& p, const Word& w) {
  return !find_redex(p, w, Strategy::Leftmost).has_value();
}

std::vector<Word> filtration_basis(const Presentation& p, int n) {
  std::vector<Word> out;
  if (n < 0) return out;
  Word start;
  collect_words(p, start, n, true, [&](const Word& w) {
    if (p.mode() == FiltrationMode::Filtered || w.degree == n) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of_degree(const Presentation& p, int n) {
  std::vector<Word> out;
  if (n < 0) return out;
  Word start;
  collect_words(p, start, n, false, [&](const Word& w) {
    if (w.degree == n) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement multiply(const Presentation& p, const AlgebraElement& a, const AlgebraElement& b) {
  return normal_form(p, a * b);
}

std::vector<Overlap> confluence_check(const Presentation& p, int n) {
  std::vector<Overlap> out;
  const auto& rules = p.rules();
  auto resolve = [&](const Word& w, const AlgebraElement& left, const AlgebraElement& right) {
    AlgebraElement a = normal_form(p, left);
    AlgebraElement b = normal_form(p, right);
    if (!(a == b)) out.push_back(Overlap{w, std::move(a), std::move(b)});
  };
  const FieldElement one = p.field().one();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // Overlaps: a proper suffix of l1 equals a proper prefix of l2.
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (!std::equal(l1.letters.end() - static_cast<std::ptrdiff_t>(k), l1.letters.end(),
                        l2.letters.begin())) {
          continue;
        }
        Word tail;
        tail.letters.assign(l2.letters.begin() + static_cast<std::ptrdiff_t>(k), l2.letters.end());
        tail.degree = p.make_word(tail.letters).degree;
        const Word w = concat(l1, tail);
        if (w.degree > n) continue;
        resolve(w, apply(w, one, Redex{0, &rules[i]}),
                apply(w, one, Redex{l1.size() - k, &rules[j]}));
      }
      // Inclusions: l2 occurs strictly inside l1.
      if (i == j || l2.size() > l1.size() || l1.degree > n) continue;
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (!matches_at(l1, pos, l2)) continue;
        resolve(l1, apply(l1, one, Redex{0, &rules[i]}), apply(l1, one, Redex{pos, &rules[j]}));
      }
    }
  }
  return out;
}

}  // namespace valred
