#include "valred/poly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "valred/errors.hpp"

namespace valred {

namespace {

// Dense univariate polynomials, coefficients low to high, no trailing zeros.
using UPoly = std::vector<Scalar>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder over the coefficient field.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  UPoly q;
  if (udeg(a) >= udeg(b)) q.resize(a.size() - b.size() + 1);
  const Scalar lead_inv = b.back().inverse();
  while (!a.empty() && udeg(a) >= udeg(b)) {
    const std::size_t shift = a.size() - b.size();
    const Scalar c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly p) {
  if (p.empty()) return p;
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

// Bivariate polynomial as a polynomial in X (index) with coefficients in F[Y].
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly bdiv_scalar_poly(BPoly p, const UPoly& c) {
  for (auto& coeff : p) {
    if (coeff.empty()) continue;
    auto [q, r] = udivmod(coeff, c);
    if (!r.empty()) throw DomainError("content division not exact");
    coeff = std::move(q);
  }
  return p;
}

BPoly bprimitive(const BPoly& p) {
  if (p.empty()) return p;
  return bdiv_scalar_poly(p, bcontent(p));
}

// Pseudo-remainder of a by b in F[Y][X].
BPoly bprem(BPoly a, const BPoly& b) {
  const UPoly& lc = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const UPoly lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& coeff : a) coeff = umul(coeff, lc);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = usub(a[i + shift], umul(lead, b[i]));
    }
    btrim(a);
  }
  return a;
}

BPoly to_bpoly(const Poly& p) {
  BPoly out;
  for (const auto& [e, c] : p.terms()) {
    const auto xi = static_cast<std::size_t>(e[0]);
    const auto yi = static_cast<std::size_t>(e[1]);
    if (out.size() <= xi) out.resize(xi + 1);
    if (out[xi].size() <= yi) out[xi].resize(yi + 1);
    out[xi][yi] = c;
  }
  for (auto& c : out) trim(c);
  btrim(out);
  return out;
}

Poly from_bpoly(const BPoly& p, int nvars, std::uint32_t mod) {
  Poly out(nvars, mod);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (p[i][j].is_zero()) continue;
      out += Poly::monomial(p[i][j], {static_cast<int>(i), static_cast<int>(j)}, nvars);
    }
  }
  return out;
}

UPoly to_upoly(const Poly& p) {
  UPoly out;
  for (const auto& [e, c] : p.terms()) {
    const auto i = static_cast<std::size_t>(e[0]);
    if (out.size() <= i) out.resize(i + 1);
    out[i] = c;
  }
  trim(out);
  return out;
}

Poly from_upoly(const UPoly& p, std::uint32_t mod) {
  Poly out(1, mod);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) out += Poly::monomial(p[i], {static_cast<int>(i), 0}, 1);
  }
  return out;
}

}  // namespace

Poly::Poly(int nvars, std::uint32_t modulus) : nvars_(nvars), mod_(modulus) {
  if (nvars < 0 || nvars > 2) throw DimensionError("polynomials have at most two variables");
}

Poly Poly::constant(const Scalar& c, int nvars) {
  return monomial(c, {0, 0}, nvars);
}

Poly Poly::monomial(const Scalar& c, const Exponent& e, int nvars) {
  Poly p(nvars, c.modulus());
  if (e[0] < 0 || e[1] < 0) throw DomainError("negative exponent in polynomial");
  if (nvars < 2 && e[1] != 0) throw DimensionError("exponent for a missing variable");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::variable(int index, int nvars, std::uint32_t modulus) {
  Exponent e{0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(Scalar(1, modulus), e, nvars);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Scalar Poly::constant_term() const {
  auto it = terms_.find(Exponent{0, 0});
  return it == terms_.end() ? Scalar(0, mod_) : it->second;
}

int Poly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(static_cast<std::size_t>(var)));
  return d;
}

void Poly::adopt(const Poly& o) {
  if (nvars_ == o.nvars_ && mod_ == o.mod_) return;
  if (terms_.empty() && nvars_ == 0 && mod_ == 0) {
    nvars_ = o.nvars_;
    mod_ = o.mod_;
    return;
  }
  if (o.terms_.empty() && o.nvars_ == 0 && o.mod_ == 0) return;
  throw DomainError("mixing polynomials over different rings");
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r = a;
  r.adopt(b);
  r.terms_.clear();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  }
  return r;
}

Poly Poly::operator-() const { return scaled(Scalar(-1, mod_)); }

Poly Poly::scaled(const Scalar& c) const {
  Poly r(nvars_, mod_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

Poly Poly::shifted(const Exponent& s) const {
  Poly r(nvars_, mod_);
  for (const auto& [e, x] : terms_) {
    const Exponent ne{e[0] + s[0], e[1] + s[1]};
    if (ne[0] < 0 || ne[1] < 0) throw DomainError("monomial shift leaves the polynomial ring");
    r.terms_.emplace(ne, x);
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(Scalar(1, mod_), nvars_);
  Poly base = *this;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  Poly q(std::max(nvars_, d.nvars_), mod_ ? mod_ : d.mod_);
  Poly r = *this;
  const auto& [de, dc] = d.leading();
  const Scalar dinv = dc.inverse();
  while (!r.is_zero()) {
    const auto [re, rc] = r.leading();
    const Exponent s{re[0] - de[0], re[1] - de[1]};
    if (s[0] < 0 || s[1] < 0) throw DomainError("polynomial division is not exact");
    const Scalar c = rc * dinv;
    q.add_term(s, c);
    r -= d.shifted(s).scaled(c);
  }
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  const int nvars = std::max(a.nvars(), b.nvars());
  const std::uint32_t mod = a.is_zero() ? b.modulus() : a.modulus();
  if (a.is_zero() && b.is_zero()) return Poly(nvars, mod);
  if (nvars == 0) return Poly::constant(Scalar(1, mod), 0);
  if (nvars == 1) return from_upoly(ugcd(to_upoly(a), to_upoly(b)), mod);

  BPoly pa = to_bpoly(a);
  BPoly pb = to_bpoly(b);
  if (pa.empty()) std::swap(pa, pb);
  UPoly content = ugcd(bcontent(pa), pb.empty() ? UPoly{} : bcontent(pb));
  BPoly x = bprimitive(pa);
  BPoly y = bprimitive(pb);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BPoly r = bprimitive(bprem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  x = bprimitive(x);
  for (auto& c : x) c = umul(c, content);
  Poly g = from_bpoly(x, nvars, mod);
  return g.scaled(g.leading().second.inverse());
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      const int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(v)];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    // Over F_p print the symmetric representative so "-1" reads naturally.
    Scalar shown = c;
    bool negative = false;
    if (mod_ != 0) {
      if (c.value() > mod_ / 2) {
        negative = true;
        shown = -c;
      }
    } else if (sgn(c.value()) < 0) {
      negative = true;
      shown = -c;
    }
    std::string coeff = shown.to_string();
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (shown.is_one()) {
      term = mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace valred
