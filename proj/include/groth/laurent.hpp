#pragma once

// Exact sparse Laurent polynomials over Z in the indexed variable families
// a, b, x, y, z, c.  Coefficients are arbitrary precision (GMP).

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groth {

using Int = mpz_class;
using Rat = mpq_class;

enum class Family { a, b, x, y, z, c };

inline char family_char(Family f) {
  switch (f) {
    case Family::a: return 'a';
    case Family::b: return 'b';
    case Family::x: return 'x';
    case Family::y: return 'y';
    case Family::z: return 'z';
    case Family::c: return 'c';
  }
  return '?';
}

inline Family family_from_char(char ch) {
  switch (ch) {
    case 'a': return Family::a;
    case 'b': return Family::b;
    case 'x': return Family::x;
    case 'y': return Family::y;
    case 'z': return Family::z;
    case 'c': return Family::c;
  }
  throw std::invalid_argument(std::string("unknown variable family: ") + ch);
}

struct Var {
  Family family;
  int index;  // >= 1

  friend auto operator<=>(const Var&, const Var&) = default;
};

inline std::string to_string(Var v) {
  return family_char(v.family) + std::to_string(v.index);
}

inline Var parse_var(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("malformed variable: " + text);
  Family f = family_from_char(text[0]);
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed variable: " + text);
    index = index * 10 + (ch - '0');
    if (index > 1000000) throw std::invalid_argument("variable index too large: " + text);
  }
  if (index < 1) throw std::invalid_argument("variable index must be positive: " + text);
  return Var{f, index};
}

// Exponent vector, sparse: only nonzero exponents are stored, sorted by Var.
class Monomial {
 public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;

  explicit Monomial(const std::vector<Entry>& entries) {
    std::map<Var, int> acc;
    for (const auto& [v, e] : entries) acc[v] += e;
    for (const auto& [v, e] : acc)
      if (e != 0) factors_.emplace_back(v, checked(e));
  }

  Monomial(Var v, int e) {
    if (e != 0) factors_.emplace_back(v, checked(e));
  }

  bool is_one() const { return factors_.empty(); }
  const std::vector<Entry>& factors() const { return factors_; }

  int exponent(Var v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Entry& e, Var t) { return e.first < t; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  // Total absolute degree; the grading used by the canonical term order.
  long long grade() const {
    long long g = 0;
    for (const auto& [v, e] : factors_) g += e < 0 ? -static_cast<long long>(e) : e;
    return g;
  }

  friend Monomial operator*(const Monomial& m1, const Monomial& m2) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < m1.factors_.size() || j < m2.factors_.size()) {
      if (j == m2.factors_.size() ||
          (i < m1.factors_.size() && m1.factors_[i].first < m2.factors_[j].first)) {
        out.factors_.push_back(m1.factors_[i++]);
      } else if (i == m1.factors_.size() || m2.factors_[j].first < m1.factors_[i].first) {
        out.factors_.push_back(m2.factors_[j++]);
      } else {
        int e = checked(m1.factors_[i].second + m2.factors_[j].second);
        if (e != 0) out.factors_.emplace_back(m1.factors_[i].first, e);
        ++i, ++j;
      }
    }
    return out;
  }

  Monomial inverse() const {
    Monomial out = *this;
    for (auto& [v, e] : out.factors_) e = -e;
    return out;
  }

  Monomial pow(int k) const {
    Monomial out;
    if (k == 0) return out;
    out = *this;
    for (auto& [v, e] : out.factors_) e = checked_mul(e, k);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Canonical order: by grade, then lexicographic on raw exponent vectors over
  // the (family,index) variable order with the larger exponent ranked first.
  // Pinned by the rendered forms "x1 - y1" and "1 - b1*b2^-1".
  friend bool operator<(const Monomial& m1, const Monomial& m2) {
    long long g1 = m1.grade(), g2 = m2.grade();
    if (g1 != g2) return g1 < g2;
    std::size_t i = 0, j = 0;
    const auto& f1 = m1.factors_;
    const auto& f2 = m2.factors_;
    while (i < f1.size() || j < f2.size()) {
      if (j == f2.size() || (i < f1.size() && f1[i].first < f2[j].first)) {
        return f1[i].second > 0;
      } else if (i == f1.size() || f2[j].first < f1[i].first) {
        return f2[j].second < 0;
      } else {
        if (f1[i].second != f2[j].second) return f1[i].second > f2[j].second;
        ++i, ++j;
      }
    }
    return false;
  }

 private:
  static int checked(int e) {
    if (e > 1000000 || e < -1000000) throw std::overflow_error("monomial exponent overflow");
    return e;
  }
  static int checked_mul(int e, int k) {
    long long p = static_cast<long long>(e) * k;
    if (p > 1000000 || p < -1000000) throw std::overflow_error("monomial exponent overflow");
    return static_cast<int>(p);
  }

  std::vector<Entry> factors_;
};

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(v);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

class LaurentPoly {
 public:
  LaurentPoly() = default;

  // Implicit on purpose: integer constants are ring elements.
  LaurentPoly(int value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
  }
  LaurentPoly(const Int& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
  }

  static LaurentPoly variable(Var v) { return term(Monomial(v, 1), 1); }

  static LaurentPoly term(const Monomial& m, const Int& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Collects the terms where v has exponent e, with v stripped.
  LaurentPoly coefficient_of(Var v, int e) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) == e) out.add(m * Monomial(v, -e), c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly out = f;
    out += g;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly out = f;
    out -= g;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& f) {
    LaurentPoly out = f;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly out;
    for (const auto& [mf, cf] : f.terms_)
      for (const auto& [mg, cg] : g.terms_) out.add(mf * mg, cf * cg);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // The poly as sign * monomial, if it is a unit of the Laurent ring.
  std::optional<std::pair<Monomial, int>> as_unit_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (c == 1) return std::make_pair(m, 1);
    if (c == -1) return std::make_pair(m, -1);
    return std::nullopt;
  }

  std::vector<Var> variables() const {
    std::vector<Var> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Extremes of the exponent of v across terms; terms without v count as 0.
  int min_exponent(Var v) const {
    int lo = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(v);
      if (first || e < lo) lo = e;
      first = false;
    }
    return lo;
  }

  int max_exponent(Var v) const {
    int hi = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(v);
      if (first || e > hi) hi = e;
      first = false;
    }
    return hi;
  }

  // Simultaneous substitution.  A variable occurring with a negative exponent
  // must map to a unit monomial, so that inversion stays inside the ring.
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& images) const;

  Rat eval(const std::map<Var, Rat>& point) const {
    Rat total = 0;
    for (const auto& [m, coeff] : terms_) {
      Rat prod(coeff);
      for (const auto& [v, e] : m.factors()) {
        auto it = point.find(v);
        if (it == point.end())
          throw std::invalid_argument("unassigned variable " + to_string(v));
        if (it->second == 0 && e < 0)
          throw std::domain_error("zero assigned to inverted variable " + to_string(v));
        Rat p = 1;
        for (int k = 0; k < (e < 0 ? -e : e); ++k) p *= it->second;
        if (e < 0) p = Rat(1) / p;
        prod *= p;
      }
      total += prod;
    }
    return total;
  }

 private:
  void add(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Int> terms_;
};

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    Int mag = abs(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += '*';
      }
      out += to_string(m);
    }
  }
  return out;
}

// Nonnegative powers only; substitution handles the inverted-unit case.
inline LaurentPoly pow(const LaurentPoly& base, int e) {
  if (e < 0) throw std::invalid_argument("pow expects a nonnegative exponent");
  LaurentPoly out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

inline LaurentPoly LaurentPoly::substitute(const std::map<Var, LaurentPoly>& images) const {
  LaurentPoly out;
  // Image powers recur across terms; cache them.
  std::map<std::pair<Var, int>, LaurentPoly> powers;
  for (const auto& [m, coeff] : terms_) {
    std::vector<Monomial::Entry> kept;
    LaurentPoly factor = 1;
    for (const auto& [v, e] : m.factors()) {
      auto img = images.find(v);
      if (img == images.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto hit = powers.find(key);
      if (hit == powers.end()) {
        LaurentPoly p;
        if (e >= 0) {
          p = pow(img->second, e);
        } else {
          auto unit = img->second.as_unit_monomial();
          if (!unit) throw std::domain_error("non-invertible image for " + to_string(v));
          int sign = (unit->second < 0 && (e % 2 != 0)) ? -1 : 1;
          p = term(unit->first.pow(e), sign);
        }
        hit = powers.emplace(key, std::move(p)).first;
      }
      factor *= hit->second;
    }
    out += term(Monomial(kept), coeff) * factor;
  }
  return out;
}

// Plain lexicographic order on exponent vectors, used only inside division.
// Unlike the canonical order it is translation invariant, so leading terms
// behave under monomial multiplication.
struct LexMonomialLess {
  bool operator()(const Monomial& m1, const Monomial& m2) const {
    std::size_t i = 0, j = 0;
    const auto& f1 = m1.factors();
    const auto& f2 = m2.factors();
    while (i < f1.size() || j < f2.size()) {
      if (j == f2.size() || (i < f1.size() && f1[i].first < f2[j].first)) {
        return f1[i].second < 0;
      } else if (i == f1.size() || f2[j].first < f1[i].first) {
        return f2[j].second > 0;
      } else {
        if (f1[i].second != f2[j].second) return f1[i].second < f2[j].second;
        ++i, ++j;
      }
    }
    return false;
  }
};

// Exact division in the Laurent ring.  Leading-term elimination under plain
// lex order; termination is forced by confining quotient monomials to the box
// [min_t(f)-min_t(g), max_t(f)-max_t(g)] per variable t, which must contain
// the true quotient's exponents because Z[vars^{+-1}] is a domain.
inline LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero");
  if (f.is_zero()) return LaurentPoly();

  std::vector<Var> vars = f.variables();
  for (Var v : g.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<std::pair<Var, std::pair<int, int>>> box;
  box.reserve(vars.size());
  for (Var t : vars)
    box.emplace_back(t, std::make_pair(f.min_exponent(t) - g.min_exponent(t),
                                       f.max_exponent(t) - g.max_exponent(t)));

  const LexMonomialLess lex;
  std::map<Monomial, Int, LexMonomialLess> rem(f.terms().begin(), f.terms().end());
  auto ltg = std::max_element(
      g.terms().begin(), g.terms().end(),
      [&](const auto& s, const auto& t) { return lex(s.first, t.first); });
  const Monomial ginv = ltg->first.inverse();

  auto fail = [&rem]() {
    LaurentPoly witness;
    for (const auto& [m, c] : rem) witness += LaurentPoly::term(m, c);
    throw std::domain_error("not divisible: remainder " + to_string(witness));
  };

  LaurentPoly q;
  while (!rem.empty()) {
    const auto& [lm, lc] = *rem.rbegin();
    if (!mpz_divisible_p(lc.get_mpz_t(), ltg->second.get_mpz_t())) fail();
    Monomial qm = lm * ginv;
    for (const auto& [t, range] : box) {
      int e = qm.exponent(t);
      if (e < range.first || e > range.second) fail();
    }
    Int qc = lc / ltg->second;
    q += LaurentPoly::term(qm, qc);
    for (const auto& [mg, cg] : g.terms()) {
      Monomial m = qm * mg;
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, -(qc * cg));
      } else {
        it->second -= qc * cg;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

}  // namespace groth
