#pragma once

// The specialization routes and everything derived from them:
// G_w(b_v;b) three ways (direct product specialization, Hecke product over
// the crossing diagram, literal signed sum over FK-graphs), the Schubert
// specialization over reduced graphs, the positivity rewrite, the product
// formula, and the shift identity.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "groth/fkgraph.hpp"
#include "groth/hecke.hpp"
#include "groth/laurent.hpp"
#include "groth/perm.hpp"

namespace groth {

// Slot i of an alphabet lives at [i-1].
using Alphabet = std::vector<LaurentPoly>;

inline Alphabet family_alphabet(Family f, int n) {
  Alphabet out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(LaurentPoly::variable(Var{f, i}));
  return out;
}

// G^(n)(b_v;b) as a Hecke element: big_G with a_j -> b_{v(j)} up front.
inline HeckeElt theorem_lhs_elt(const Permutation& v) {
  std::map<int, LaurentPoly> images;
  for (int j = 1; j <= v.size() - 1; ++j)
    images.emplace(j, LaurentPoly::variable(Var{Family::b, v(j)}));
  return big_G(v.size(), images);
}

inline LaurentPoly theorem_lhs(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
  return coefficient(theorem_lhs_elt(v), w);
}

// Product of h_{nu(i,j)}(alph_i / alph_{v(j)}) over the crossings in canonical
// order.  With the b alphabet this is the theorem's right side.
inline HeckeElt crossing_hecke_product(const CrossingDiagram& diag, const Alphabet& alph) {
  const int n = diag.v.size();
  if (static_cast<int>(alph.size()) < n) throw std::invalid_argument("alphabet too short");
  HeckeElt e = HeckeElt::unit(n);
  for (const Crossing& x : diag.crossings)
    e = mul_h(e, x.nu, unit_ratio(alph[x.row - 1], alph[diag.v(x.col) - 1]));
  return e;
}

inline LaurentPoly theorem_rhs_product(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
  CrossingDiagram diag = crossing_diagram(v);
  return coefficient(crossing_hecke_product(diag, family_alphabet(Family::b, v.size())), w);
}

// Signed subset sum over all 2^{l(v)} subsets at once, sharing prefix weight
// products along the enumeration tree: result[u] is the sum over FK-graphs D
// for u of (-1)^{|D|-l(u)} prod_{(i,j) in D} (1 - alph_i/alph_{v(j)}).
inline std::map<Permutation, LaurentPoly> fk_sum_table(const CrossingDiagram& diag,
                                                       const Alphabet& alph) {
  const int n = diag.v.size();
  if (static_cast<int>(alph.size()) < n) throw std::invalid_argument("alphabet too short");
  std::vector<LaurentPoly> factors;
  factors.reserve(diag.crossings.size());
  for (const Crossing& x : diag.crossings)
    factors.push_back(LaurentPoly(1) - unit_ratio(alph[x.row - 1], alph[diag.v(x.col) - 1]));

  std::map<Permutation, LaurentPoly> table;
  auto walk = [&](auto&& self, std::size_t t, const Permutation& u, int sign,
                  const LaurentPoly& weight) -> void {
    if (t == diag.crossings.size()) {
      auto [it, inserted] = table.emplace(u, sign > 0 ? weight : -weight);
      if (!inserted) {
        if (sign > 0)
          it->second += weight;
        else
          it->second -= weight;
      }
      return;
    }
    self(self, t + 1, u, sign, weight);
    const int i = diag.crossings[t].nu;
    if (u.has_right_descent(i))
      self(self, t + 1, u, -sign, weight * factors[t]);
    else
      self(self, t + 1, u.right_simple(i), sign, weight * factors[t]);
  };
  walk(walk, 0, Permutation::identity(n), 1, LaurentPoly(1));
  for (auto it = table.begin(); it != table.end();)
    it = it->second.is_zero() ? table.erase(it) : std::next(it);
  return table;
}

inline LaurentPoly theorem_rhs_enumerated(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
  CrossingDiagram diag = crossing_diagram(v);
  auto table = fk_sum_table(diag, family_alphabet(Family::b, v.size()));
  auto it = table.find(w);
  return it == table.end() ? LaurentPoly() : it->second;
}

// Reduced graphs only, with the Cor. 1 weights y_{v(j)} - y_i.  A subset is
// reduced exactly when every step of the ordered product increases length,
// so the flip branch is pruned instead of enumerated.
inline std::map<Permutation, LaurentPoly> reduced_sum_table(const CrossingDiagram& diag) {
  const int n = diag.v.size();
  std::vector<LaurentPoly> factors;
  factors.reserve(diag.crossings.size());
  for (const Crossing& x : diag.crossings)
    factors.push_back(LaurentPoly::variable(Var{Family::y, diag.v(x.col)}) -
                      LaurentPoly::variable(Var{Family::y, x.row}));

  std::map<Permutation, LaurentPoly> table;
  auto walk = [&](auto&& self, std::size_t t, const Permutation& u,
                  const LaurentPoly& weight) -> void {
    if (t == diag.crossings.size()) {
      auto [it, inserted] = table.emplace(u, weight);
      if (!inserted) it->second += weight;
      return;
    }
    self(self, t + 1, u, weight);
    const int i = diag.crossings[t].nu;
    if (!u.has_right_descent(i))
      self(self, t + 1, u.right_simple(i), weight * factors[t]);
  };
  walk(walk, 0, Permutation::identity(n), LaurentPoly(1));
  return table;
}

inline LaurentPoly schubert_specialization(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
  auto table = reduced_sum_table(crossing_diagram(v));
  auto it = table.find(w);
  return it == table.end() ? LaurentPoly() : it->second;
}

// S_w(y_v;y) rewritten in z_i = y_{i+1} - y_i, i.e. y_i -> z_1 + ... + z_{i-1}.
// The returned table must be nonzero with nonnegative entries; a violation
// would contradict the Bruhat positivity argument and throws.
inline std::map<Monomial, Int> positivity_witness(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(w, v)) throw std::invalid_argument("w must be below v in Bruhat order");
  LaurentPoly f = schubert_specialization(v, w);
  std::map<Var, LaurentPoly> images;
  for (int i = 1; i <= v.size(); ++i) {
    LaurentPoly sum;
    for (int t = 1; t < i; ++t) sum += LaurentPoly::variable(Var{Family::z, t});
    images.emplace(Var{Family::y, i}, sum);
  }
  LaurentPoly g = f.substitute(images);
  if (g.is_zero()) throw std::domain_error("positivity violated: table is zero");
  std::map<Monomial, Int> table;
  for (const auto& [m, c] : g.terms()) {
    if (c < 0) throw std::domain_error("positivity violated at monomial " + to_string(m));
    table.emplace(m, c);
  }
  return table;
}

// G_v(b_v;b) = prod over C(D_v) of (1 - b_i/b_{v(j)}), expanded.
inline LaurentPoly product_formula(const Permutation& v) {
  LaurentPoly out = 1;
  for (const Crossing& x : crossing_diagram(v).crossings)
    out *= LaurentPoly(1) - unit_ratio(LaurentPoly::variable(Var{Family::b, x.row}),
                                       LaurentPoly::variable(Var{Family::b, v(x.col)}));
  return out;
}

// True iff the coefficient of w in G^(n)(a;b) with a_i = b_i = c_i for i <= m
// equals the relabeled G_u(a_{m+1},...,a_n; b_{m+1},...,b_n) when w = 1^m x u,
// and vanishes otherwise.
inline bool shift_identity_check(const Permutation& w, int m) {
  const int n = w.size();
  if (m < 0 || m > n) throw std::invalid_argument("shift amount out of range");
  std::map<int, LaurentPoly> a_images;
  for (int i = 1; i <= std::min(m, n - 1); ++i)
    a_images.emplace(i, LaurentPoly::variable(Var{Family::c, i}));
  std::map<Var, LaurentPoly> b_images;
  for (int i = 1; i <= m; ++i)
    b_images.emplace(Var{Family::b, i}, LaurentPoly::variable(Var{Family::c, i}));
  LaurentPoly specialized = coefficient(big_G(n, a_images), w).substitute(b_images);

  for (int i = 1; i <= m; ++i)
    if (w(i) != i) return specialized.is_zero();
  if (m == n) return specialized == LaurentPoly(1);

  std::vector<int> window;
  for (int j = m + 1; j <= n; ++j) window.push_back(w(j) - m);
  Permutation u{window};
  std::map<Var, LaurentPoly> relabel;
  for (int i = 1; i <= n - m; ++i) {
    relabel.emplace(Var{Family::a, i}, LaurentPoly::variable(Var{Family::a, m + i}));
    relabel.emplace(Var{Family::b, i}, LaurentPoly::variable(Var{Family::b, m + i}));
  }
  return specialized == coefficient(big_G(n - m), u).substitute(relabel);
}

}  // namespace groth
