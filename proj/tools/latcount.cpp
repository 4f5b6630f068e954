#include <iostream>
#include <string>
#include <vector>

#include "latcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  latcount::FormulaSet formulas = latcount::default_formulas();
#ifdef LATCOUNT_INJECT_FAULT
  // Test build: one block stratum is off by one.
  formulas.b3 = [](int m, int k) {
    latcount::Count v = latcount::b3_blocks(m, k);
    return m == 8 && k == 1 ? v + 1 : v;
  };
#endif
  return latcount::run_cli(args, std::cout, std::cerr, formulas);
}
