#pragma once

// Degenerate Hecke algebra over the Laurent ring: basis of permutations,
// s_i s_j = s_j s_i (|i-j| >= 2), braid relation, s_i^2 = -s_i.
// Right action on a basis permutation: w.s_i = ws_i if the length goes up,
// else -w.  Everything here is built from that single rule.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groth/laurent.hpp"
#include "groth/perm.hpp"

namespace groth {

struct SignedPerm {
  int sign;
  Permutation perm;
};

// Product s_{i1}...s_{ik} applied to the identity, left to right.
inline SignedPerm word_to_hecke(const std::vector<int>& word, int n) {
  Permutation w = Permutation::identity(n);
  int sign = 1;
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    if (w.has_right_descent(i))
      sign = -sign;
    else
      w = w.right_simple(i);
  }
  return {sign, w};
}

class HeckeElt {
 public:
  // Zero element of H tensor R at ambient size n.
  explicit HeckeElt(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ambient size must be positive");
  }

  static HeckeElt unit(int n) {
    HeckeElt e(n);
    e.add(Permutation::identity(n), 1);
    return e;
  }

  int n() const { return n_; }
  const std::map<Permutation, LaurentPoly>& support() const { return support_; }

  void add(const Permutation& w, const LaurentPoly& c) {
    if (w.size() != n_) throw std::invalid_argument("permutation size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = support_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) support_.erase(it);
    }
  }

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  int n_;
  std::map<Permutation, LaurentPoly> support_;
};

inline LaurentPoly coefficient(const HeckeElt& e, const Permutation& w) {
  if (w.size() != e.n()) throw std::invalid_argument("permutation size mismatch");
  auto it = e.support().find(w);
  return it == e.support().end() ? LaurentPoly() : it->second;
}

// h_i(c) = 1 + (1-c) s_i.
inline HeckeElt h_factor(int i, const LaurentPoly& c, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  HeckeElt e = HeckeElt::unit(n);
  e.add(Permutation::identity(n).right_simple(i), LaurentPoly(1) - c);
  return e;
}

inline HeckeElt mul_gen(const HeckeElt& e, int i) {
  if (i < 1 || i >= e.n()) throw std::invalid_argument("generator index out of range");
  HeckeElt out(e.n());
  for (const auto& [w, p] : e.support()) {
    if (w.has_right_descent(i))
      out.add(w, -p);
    else
      out.add(w.right_simple(i), p);
  }
  return out;
}

// e * h_i(c), the workhorse of every product sweep: one support pass, no
// intermediate two-term element.
inline HeckeElt mul_h(const HeckeElt& e, int i, const LaurentPoly& c) {
  if (i < 1 || i >= e.n()) throw std::invalid_argument("generator index out of range");
  HeckeElt out = e;
  const LaurentPoly weight = LaurentPoly(1) - c;
  for (const auto& [w, p] : e.support()) {
    LaurentPoly q = p * weight;
    if (w.has_right_descent(i))
      out.add(w, -q);
    else
      out.add(w.right_simple(i), q);
  }
  return out;
}

// Bilinear product, one generator at a time through a reduced word of each
// basis element on the right.  Never rewrites words.
inline HeckeElt mul(const HeckeElt& e, const HeckeElt& f) {
  if (e.n() != f.n()) throw std::invalid_argument("size mismatch in mul");
  HeckeElt out(e.n());
  for (const auto& [u, q] : f.support()) {
    HeckeElt part = e;
    for (int i : reduced_word(u)) part = mul_gen(part, i);
    for (const auto& [w, p] : part.support()) out.add(w, p * q);
  }
  return out;
}

// The 1x operator: s_i -> s_{i+1}, so each basis u becomes 1 x u.
inline HeckeElt shift(const HeckeElt& e) {
  HeckeElt out(e.n() + 1);
  for (const auto& [w, p] : e.support()) out.add(shift_embed(w, 1), p);
  return out;
}

inline HeckeElt substitute(const HeckeElt& e, const std::map<Var, LaurentPoly>& images) {
  HeckeElt out(e.n());
  for (const auto& [w, p] : e.support()) out.add(w, p.substitute(images));
  return out;
}

inline std::string to_string(const HeckeElt& e) {
  if (e.support().empty()) return "{}";
  std::string out = "{";
  for (const auto& [w, p] : e.support()) {
    if (out.size() > 1) out += "; ";
    out += to_string(w) + ": " + to_string(p);
  }
  return out + "}";
}

// num/den in the Laurent ring; den must be a unit.
inline LaurentPoly unit_ratio(const LaurentPoly& num, const LaurentPoly& den) {
  auto u = den.as_unit_monomial();
  if (!u) throw std::domain_error("non-invertible denominator: " + to_string(den));
  return num * LaurentPoly::term(u->first.inverse(), u->second);
}

// A_p^q(c;k) = h_{k-1+p}(b_p/c) h_{k-1+p-1}(b_{p-1}/c) ... h_{k-1+q}(b_q/c),
// the unit when q > p.  The b_j come from the global b family.
inline HeckeElt ladder_A(int p, int q, const LaurentPoly& c, int k, int n) {
  if (q > p) return HeckeElt::unit(n);
  if (q < 1) throw std::invalid_argument("ladder bounds out of range");
  HeckeElt e = HeckeElt::unit(n);
  for (int j = p; j >= q; --j)
    e = mul_h(e, k - 1 + j, unit_ratio(LaurentPoly::variable(Var{Family::b, j}), c));
  return e;
}

// G^(n)(a;b) = A_{n-1}^1(a_1;1) A_{n-2}^1(a_2;2) ... A_1^1(a_{n-1};n-1).
// Optional a_images (keyed by slot, unit monomials) substitute up front, which
// keeps intermediate supports small when sweeping specializations.
inline HeckeElt big_G(int n, const std::map<int, LaurentPoly>& a_images = {}) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  HeckeElt e = HeckeElt::unit(n);
  for (int k = 1; k <= n - 1; ++k) {
    auto it = a_images.find(k);
    const LaurentPoly ck =
        it != a_images.end() ? it->second : LaurentPoly::variable(Var{Family::a, k});
    for (int j = n - k; j >= 1; --j)
      e = mul_h(e, k - 1 + j, unit_ratio(LaurentPoly::variable(Var{Family::b, j}), ck));
  }
  return e;
}

}  // namespace groth
