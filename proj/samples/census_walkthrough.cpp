// Builds a few small lattices by hand, reduces them, and compares the closed
// forms with a direct enumeration.

#include <iostream>

#include "latcount/adjunct.hpp"
#include "latcount/document.hpp"
#include "latcount/enumeration.hpp"
#include "latcount/formulas.hpp"
#include "latcount/reduction.hpp"

using namespace latcount;

int main() {
  // A 5-chain with two ears: one on (1, 4), one on (0, 4).
  const Lattice l = realize({5, {{1, 4, 2}, {0, 4, 1}}});
  std::cout << "lattice: " << dump_document(make_document(l)) << '\n';

  const auto rep = decompose(l);
  std::cout << "spine " << rep.spine << ", " << rep.attachments.size() << " attachments\n";

  const Lattice fbb = fundamental_basic_block_of(l);
  std::cout << "fundamental basic block (" << to_string(classify_fbb(l)) << "):\n" << to_edges(fbb.digraph()) << "\n\n";

  std::cout << "n  formula  enumerated\n";
  for (int n = 6; n <= 9; ++n)
    std::cout << n << "  " << three_reducible_lattices(n) << "  " << enumerate_by_reducible(n, 3).size() << '\n';

  std::cout << "three-reducible lattices on 100 elements: " << three_reducible_lattices(100) << '\n';
}
