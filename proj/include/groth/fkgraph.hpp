#pragma once

// Crossing diagrams and FK-graphs.  The diagram of v consists of
// hooks going due north and due west from the points (v(j), j); row i runs
// downward, column j rightward.  Two hooks cross at (i,j) exactly when
// v(j) > i and v^{-1}(i) > j, and the crossing is labeled
// nu(i,j) = j + #{k > j : v(k) < i}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groth/hecke.hpp"
#include "groth/perm.hpp"

namespace groth {

struct Crossing {
  int row;
  int col;
  int nu;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingDiagram {
  Permutation v;
  // Canonical reading order: column ascending, row descending within a
  // column.  This is a linear extension of the south-west to north-east
  // constraint "(i,j) before (i',j') whenever i >= i' and j <= j'".
  std::vector<Crossing> crossings;
};

inline CrossingDiagram crossing_diagram(const Permutation& v) {
  const int n = v.size();
  const Permutation vinv = v.inverse();
  std::vector<Crossing> crossings;
  for (int j = 1; j <= n; ++j) {
    for (int i = n; i >= 1; --i) {
      if (v(j) > i && vinv(i) > j) {
        int nu = j;
        for (int k = j + 1; k <= n; ++k)
          if (v(k) < i) ++nu;
        crossings.push_back({i, j, nu});
      }
    }
  }
  return {v, std::move(crossings)};
}

struct FKGraph {
  CrossingDiagram diagram;
  std::vector<Crossing> subset;  // canonical order
  int sign;
  Permutation result;  // w(D)
  bool reduced;        // |D| = length(w(D))
};

// Bit t of mask selects diagram.crossings[t].
inline FKGraph classify_mask(const CrossingDiagram& diag, std::uint64_t mask) {
  const int count = static_cast<int>(diag.crossings.size());
  if (count > 63) throw std::invalid_argument("diagram too large for mask enumeration");
  if (count < 64 && (mask >> count) != 0) throw std::invalid_argument("mask out of range");
  std::vector<Crossing> subset;
  std::vector<int> word;
  for (int t = 0; t < count; ++t) {
    if (mask >> t & 1) {
      subset.push_back(diag.crossings[t]);
      word.push_back(diag.crossings[t].nu);
    }
  }
  SignedPerm sp = word_to_hecke(word, diag.v.size());
  const bool reduced = static_cast<int>(word.size()) == sp.perm.length();
  return {diag, std::move(subset), sp.sign, sp.perm, reduced};
}

inline FKGraph classify_subset(const CrossingDiagram& diag,
                               const std::vector<std::pair<int, int>>& subset) {
  std::uint64_t mask = 0;
  for (const auto& [i, j] : subset) {
    int idx = -1;
    for (int t = 0; t < static_cast<int>(diag.crossings.size()); ++t) {
      if (diag.crossings[t].row == i && diag.crossings[t].col == j) {
        idx = t;
        break;
      }
    }
    if (idx < 0) throw std::invalid_argument("subset not contained in diagram");
    if (mask >> idx & 1) throw std::invalid_argument("duplicate crossing in subset");
    mask |= std::uint64_t(1) << idx;
  }
  return classify_mask(diag, mask);
}

// Grid picture: '.' hook corners, '|' and '-' hook lines, '+' crossings in D,
// '%' crossings not in D (the strings avoid each other there).  Row i is the
// hook labeled b_i.
inline std::string render_ascii(const CrossingDiagram& diag,
                                const std::vector<Crossing>* subset = nullptr) {
  const int n = diag.v.size();
  const Permutation vinv = diag.v.inverse();
  auto selected = [&](int r, int c) {
    if (!subset) return false;
    for (const Crossing& x : *subset)
      if (x.row == r && x.col == c) return true;
    return false;
  };
  const std::size_t label_width = 1 + std::to_string(n).size();
  std::string out;
  for (int r = 1; r <= n; ++r) {
    std::string line = "b" + std::to_string(r);
    line.append(label_width - line.size(), ' ');
    for (int c = 1; c <= n; ++c) {
      line += ' ';
      const bool vertical = diag.v(c) > r;
      const bool horizontal = vinv(r) > c;
      if (diag.v(c) == r)
        line += '.';
      else if (vertical && horizontal)
        line += selected(r, c) ? '+' : '%';
      else if (vertical)
        line += '|';
      else if (horizontal)
        line += '-';
      else
        line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace groth
