// Exports one divided-difference oracle table as JSON, the same schema and
// the same bytes the golden fixtures under tests/fixtures/ are frozen from.
// Rerun after a deliberate schema change:
//
//   export_tables schubert 2 > tests/fixtures/schubert_xy_n2.json

#include <cstdlib>
#include <iostream>
#include <string>

#include "groth/json_io.hpp"
#include "groth/oracles.hpp"

int main(int argc, char** argv) {
  const std::string kind = argc > 1 ? argv[1] : "schubert";
  const int n = argc > 2 ? std::atoi(argv[2]) : 3;
  if (kind != "schubert" && kind != "grothendieck") {
    std::cerr << "usage: export_tables [schubert|grothendieck] [n]\n";
    return 2;
  }
  const groth::PolyTable table =
      kind == "schubert" ? groth::schubert_table(n) : groth::grothendieck_table_ab(n);
  std::cout << groth::table_to_json(table).dump(2) << "\n";
  return 0;
}
