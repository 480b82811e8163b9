#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groth/fkgraph.hpp"
#include "groth/perm.hpp"
#include "groth/rng.hpp"

using groth::Crossing;
using groth::CrossingDiagram;
using groth::FKGraph;
using groth::Permutation;

namespace {

// Rothe diagram, built directly from the inversion condition.
std::set<std::pair<int, int>> rothe(const Permutation& u) {
  std::set<std::pair<int, int>> out;
  const Permutation ui = u.inverse();
  for (int i = 1; i <= u.size(); ++i)
    for (int j = 1; j <= u.size(); ++j)
      if (u(i) > j && ui(j) > i) out.insert({i, j});
  return out;
}

// Random linear extension of the reading constraint "x before y whenever
// x.row >= y.row and x.col <= y.col", by Kahn's algorithm with seeded picks.
std::vector<Crossing> random_extension(const std::vector<Crossing>& subset, groth::Lcg64& rng) {
  std::vector<Crossing> pending = subset, out;
  while (!pending.empty()) {
    std::vector<std::size_t> ready;
    for (std::size_t y = 0; y < pending.size(); ++y) {
      bool blocked = false;
      for (std::size_t x = 0; x < pending.size(); ++x)
        if (x != y && pending[x].row >= pending[y].row && pending[x].col <= pending[y].col)
          blocked = true;
      if (!blocked) ready.push_back(y);
    }
    const std::size_t pick = ready[rng.below(ready.size())];
    out.push_back(pending[pick]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace

TEST_CASE("small diagrams", "[fkgraph]") {
  REQUIRE(groth::crossing_diagram(Permutation::identity(3)).crossings.empty());
  const CrossingDiagram d21 = groth::crossing_diagram(Permutation({2, 1}));
  REQUIRE(d21.crossings == std::vector<Crossing>{{1, 1, 1}});
  const CrossingDiagram d321 = groth::crossing_diagram(Permutation({3, 2, 1}));
  REQUIRE(d321.crossings == std::vector<Crossing>{{2, 1, 2}, {1, 1, 1}, {1, 2, 2}});
}

TEST_CASE("the running six-element example", "[fkgraph]") {
  const CrossingDiagram d = groth::crossing_diagram(groth::parse_permutation("264135"));
  const std::vector<Crossing> expected = {{1, 1, 1}, {5, 2, 5}, {4, 2, 4}, {3, 2, 3},
                                          {1, 2, 2}, {3, 3, 4}, {1, 3, 3}};
  REQUIRE(d.crossings == expected);
}

TEST_CASE("crossing count is the length and the set is a Rothe diagram", "[fkgraph]") {
  for (const Permutation& v : groth::all_permutations(5)) {
    const CrossingDiagram d = groth::crossing_diagram(v);
    REQUIRE(static_cast<int>(d.crossings.size()) == v.length());
    std::set<std::pair<int, int>> cells;
    for (const Crossing& x : d.crossings) cells.insert({x.row, x.col});
    REQUIRE(cells.size() == d.crossings.size());
    REQUIRE(cells == rothe(v.inverse()));
  }
}

TEST_CASE("reading order is column-ascending, row-descending", "[fkgraph]") {
  for (const Permutation& v : groth::all_permutations(4)) {
    const CrossingDiagram d = groth::crossing_diagram(v);
    for (std::size_t t = 1; t < d.crossings.size(); ++t) {
      const Crossing &a = d.crossings[t - 1], &b = d.crossings[t];
      REQUIRE((a.col < b.col || (a.col == b.col && a.row > b.row)));
    }
  }
}

TEST_CASE("the full crossing set gives back v, reduced, with sign +1", "[fkgraph]") {
  for (const Permutation& v : groth::all_permutations(4)) {
    const CrossingDiagram d = groth::crossing_diagram(v);
    const FKGraph g = groth::classify_mask(d, (1ull << d.crossings.size()) - 1);
    REQUIRE(g.result == v);
    REQUIRE(g.sign == 1);
    REQUIRE(g.reduced);
  }
}

TEST_CASE("signs follow the parity of dropped letters", "[fkgraph]") {
  std::vector<Permutation> vs = groth::all_permutations(3);
  vs.push_back(groth::parse_permutation("264135").embed(6));
  for (const Permutation& v : vs) {
    const CrossingDiagram d = groth::crossing_diagram(v);
    for (std::uint64_t mask = 0; mask < (1ull << d.crossings.size()); ++mask) {
      const FKGraph g = groth::classify_mask(d, mask);
      const int excess = static_cast<int>(g.subset.size()) - g.result.length();
      REQUIRE(excess >= 0);
      REQUIRE(g.sign == (excess % 2 == 0 ? 1 : -1));
      REQUIRE(g.reduced == (excess == 0));
      if (g.reduced) REQUIRE(g.sign == 1);
    }
  }
}

TEST_CASE("any linear extension of a subset gives the same signed result", "[fkgraph]") {
  groth::Lcg64 rng(11);
  std::vector<std::pair<Permutation, std::uint64_t>> picks;
  const CrossingDiagram d321 = groth::crossing_diagram(Permutation({3, 2, 1}));
  for (std::uint64_t mask = 0; mask < 8; ++mask) picks.emplace_back(d321.v, mask);
  const Permutation big = groth::parse_permutation("264135");
  for (std::uint64_t mask : {127ull, 85ull, 37ull, 101ull}) picks.emplace_back(big, mask);

  for (const auto& [v, mask] : picks) {
    const CrossingDiagram d = groth::crossing_diagram(v);
    const FKGraph g = groth::classify_mask(d, mask);
    for (int trial = 0; trial < 3; ++trial) {
      const std::vector<Crossing> order = random_extension(g.subset, rng);
      std::vector<int> word;
      for (const Crossing& x : order) word.push_back(x.nu);
      const groth::SignedPerm sp = groth::word_to_hecke(word, v.size());
      REQUIRE(sp.perm == g.result);
      REQUIRE(sp.sign == g.sign);
    }
  }
}

TEST_CASE("classify_subset validates membership", "[fkgraph]") {
  const CrossingDiagram d = groth::crossing_diagram(Permutation({3, 2, 1}));
  const FKGraph g = groth::classify_subset(d, {{1, 1}, {2, 1}});
  REQUIRE(g.subset == std::vector<Crossing>{{2, 1, 2}, {1, 1, 1}});
  REQUIRE(g.result == Permutation({3, 1, 2}));
  REQUIRE_THROWS_AS(groth::classify_subset(d, {{2, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(groth::classify_subset(d, {{1, 1}, {1, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(groth::classify_mask(d, 8), std::invalid_argument);
}

TEST_CASE("renderings", "[fkgraph]") {
  const CrossingDiagram d21 = groth::crossing_diagram(Permutation({2, 1}));
  REQUIRE(groth::render_ascii(d21, &d21.crossings) == "b1 + .\nb2 .\n");
  const std::vector<Crossing> empty;
  REQUIRE(groth::render_ascii(d21, &empty) == "b1 % .\nb2 .\n");
  REQUIRE(groth::render_ascii(d21) == "b1 % .\nb2 .\n");

  const CrossingDiagram did = groth::crossing_diagram(Permutation::identity(3));
  REQUIRE(groth::render_ascii(did) == "b1 . | |\nb2 - . |\nb3 - - .\n");

  const CrossingDiagram d321 = groth::crossing_diagram(Permutation({3, 2, 1}));
  REQUIRE(groth::render_ascii(d321, &d321.crossings) == "b1 + + .\nb2 + .\nb3 .\n");
  const FKGraph g = groth::classify_subset(d321, {{1, 1}});
  REQUIRE(groth::render_ascii(d321, &g.subset) == "b1 + % .\nb2 % .\nb3 .\n");

  const CrossingDiagram dbig = groth::crossing_diagram(groth::parse_permutation("264135"));
  const std::string art = groth::render_ascii(dbig, &dbig.crossings);
  REQUIRE(std::count(art.begin(), art.end(), '+') == 7);
  REQUIRE(std::count(art.begin(), art.end(), '%') == 0);
  REQUIRE(art.substr(0, art.find('\n')) == "b1 + + + . | |");
}
