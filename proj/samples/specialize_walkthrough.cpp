// Walks one pair (v, w) through the three routes that the verify suites
// compare wholesale: the coefficient of w after substituting the rearranged
// alphabet into G^(n), the ordered product of h-factors over the crossings
// of D_v, and the signed enumeration of FK-graphs.  Also draws the graphs
// that actually contribute to the coefficient.

#include <cstdint>
#include <iostream>

#include "groth/fkgraph.hpp"
#include "groth/perm.hpp"
#include "groth/specialize.hpp"

int main() {
  using namespace groth;

  const Permutation v = parse_permutation("321");
  const Permutation w = parse_permutation("231");

  std::cout << "v = " << to_string(v) << ", w = " << to_string(w) << "\n\n";
  std::cout << "substitution route: " << to_string(theorem_lhs(v, w)) << "\n";
  std::cout << "crossing product:   " << to_string(theorem_rhs_product(v, w)) << "\n";
  std::cout << "FK-graph sum:       " << to_string(theorem_rhs_enumerated(v, w)) << "\n\n";

  const CrossingDiagram diag = crossing_diagram(v);
  std::cout << "C(D_v) has " << diag.crossings.size() << " crossings; graphs with w(D) = "
            << to_string(w) << ":\n\n";
  for (std::uint64_t mask = 0; mask < (1ull << diag.crossings.size()); ++mask) {
    const FKGraph g = classify_mask(diag, mask);
    if (!(g.result == w)) continue;
    std::cout << "sign " << (g.sign > 0 ? "+1" : "-1") << ", "
              << (g.reduced ? "reduced" : "not reduced") << ":\n"
              << render_ascii(diag, &g.subset) << "\n";
  }
  return 0;
}
