#pragma once

// Independent ground truth: double Schubert and Grothendieck polynomials by
// divided-difference recursion from the closed-form top classes.  Nothing
// here touches the crossing-diagram machinery these tables are used to check,
// except the doubled-alphabet comparison at the bottom, which is the check.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groth/laurent.hpp"
#include "groth/perm.hpp"
#include "groth/specialize.hpp"

namespace groth {

// (f - f with x_i, x_{i+1} swapped) / (x_i - x_{i+1}).  The numerator is
// antisymmetric in the two variables, so the division is always exact; a
// division failure here means a bug, not bad data.
inline LaurentPoly divided_difference(const LaurentPoly& f, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  for (Var v : f.variables())
    if (v.family == Family::x && f.min_exponent(v) < 0)
      throw std::invalid_argument("divided difference needs a polynomial in x");
  const LaurentPoly xi = LaurentPoly::variable(Var{Family::x, i});
  const LaurentPoly xj = LaurentPoly::variable(Var{Family::x, i + 1});
  std::map<Var, LaurentPoly> swap;
  swap.emplace(Var{Family::x, i}, xj);
  swap.emplace(Var{Family::x, i + 1}, xi);
  return exact_divide(f - f.substitute(swap), xi - xj);
}

// Isobaric variant pi_i(f) = d_i((1 - x_{i+1}) f).
inline LaurentPoly isobaric_difference(const LaurentPoly& f, int i) {
  const LaurentPoly xj = LaurentPoly::variable(Var{Family::x, i + 1});
  return divided_difference((LaurentPoly(1) - xj) * f, i);
}

struct PolyTable {
  int n;
  std::string family;  // "xy" or "ab"
  std::map<Permutation, LaurentPoly> entries;
};

inline LaurentPoly schubert_top(int n) {
  LaurentPoly out = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      out *= LaurentPoly::variable(Var{Family::x, i}) - LaurentPoly::variable(Var{Family::y, j});
  return out;
}

inline LaurentPoly grothendieck_top(int n) {
  LaurentPoly out = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      const LaurentPoly xi = LaurentPoly::variable(Var{Family::x, i});
      const LaurentPoly yj = LaurentPoly::variable(Var{Family::y, j});
      out *= xi + yj - xi * yj;
    }
  return out;
}

// Top-down fill: seed the longest element, then walk permutations in
// decreasing length (lexicographic within a length) and push one operator
// step to each descent child, keeping the first value computed.  Agreement
// across different descent paths is a tested property, not assumed here.
template <typename Op>
PolyTable descend_table(int n, const char* family, LaurentPoly top, Op&& op) {
  std::vector<Permutation> order = all_permutations(n);
  std::sort(order.begin(), order.end(), [](const Permutation& s, const Permutation& t) {
    if (s.length() != t.length()) return s.length() > t.length();
    return s < t;
  });
  PolyTable table{n, family, {}};
  table.entries.emplace(order.front(), std::move(top));
  for (const Permutation& w : order) {
    auto found = table.entries.find(w);
    if (found == table.entries.end())
      throw std::logic_error("descent recursion missed a permutation");
    const LaurentPoly& f = found->second;
    for (int i = 1; i <= n - 1; ++i) {
      if (!w.has_right_descent(i)) continue;
      Permutation child = w.right_simple(i);
      if (!table.entries.count(child)) table.entries.emplace(std::move(child), op(f, i));
    }
  }
  return table;
}

inline PolyTable schubert_table(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("schubert_table supports 1 <= n <= 6");
  return descend_table(n, "xy", schubert_top(n),
                       [](const LaurentPoly& f, int i) { return divided_difference(f, i); });
}

inline PolyTable grothendieck_table_xy(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("grothendieck tables support 1 <= n <= 5");
  return descend_table(n, "xy", grothendieck_top(n),
                       [](const LaurentPoly& f, int i) { return isobaric_difference(f, i); });
}

// Same table after the change of variables x_i = 1 - a_i^{-1}, y_i = 1 - b_i.
inline PolyTable grothendieck_table_ab(int n) {
  PolyTable xy = grothendieck_table_xy(n);
  std::map<Var, LaurentPoly> change;
  for (int i = 1; i <= n; ++i) {
    change.emplace(Var{Family::x, i},
                   LaurentPoly(1) - LaurentPoly::term(Monomial(Var{Family::a, i}, -1), 1));
    change.emplace(Var{Family::y, i},
                   LaurentPoly(1) - LaurentPoly::variable(Var{Family::b, i}));
  }
  PolyTable ab{n, "ab", {}};
  for (const auto& [w, f] : xy.entries) ab.entries.emplace(w, f.substitute(change));
  return ab;
}

struct DoubledAlphabetSides {
  LaurentPoly via_shuffle;  // crossing product in S_{2n} over c, renamed back
  LaurentPoly direct;       // coefficient of w in G^(n)(a;b)
};

// The RC-graph reduction: run the theorem in S_{2n} for the shuffle
// permutation (n+1,...,2n,1,...,n) over the base alphabet
// c = (b_1..b_n,a_1..a_n), then rename c_i -> b_i and c_{n+i} -> a_i.
// The result must be the plain Grothendieck coefficient.
inline DoubledAlphabetSides doubled_alphabet_sides(const Permutation& w) {
  const int n = w.size();
  if (n > 3) throw std::invalid_argument("doubled-alphabet check supports n <= 3");
  const int nn = 2 * n;
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(nn));
  for (int i = 1; i <= n; ++i) window.push_back(n + i);
  for (int i = 1; i <= n; ++i) window.push_back(i);
  const Permutation shuffle{window};
  HeckeElt prod = crossing_hecke_product(crossing_diagram(shuffle), family_alphabet(Family::c, nn));
  LaurentPoly rhs = coefficient(prod, w.embed(nn));
  std::map<Var, LaurentPoly> rename;
  for (int i = 1; i <= n; ++i) {
    rename.emplace(Var{Family::c, i}, LaurentPoly::variable(Var{Family::b, i}));
    rename.emplace(Var{Family::c, n + i}, LaurentPoly::variable(Var{Family::a, i}));
  }
  return {rhs.substitute(rename), coefficient(big_G(n), w)};
}

inline bool doubled_alphabet_check(const Permutation& w) {
  DoubledAlphabetSides sides = doubled_alphabet_sides(w);
  return sides.via_shuffle == sides.direct;
}

}  // namespace groth
