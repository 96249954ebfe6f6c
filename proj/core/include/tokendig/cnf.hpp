#pragma once

#include <array>
#include <vector>

namespace tokendig {

/// Literal in DIMACS convention: +v means x_v, -v means ¬x_v, v >= 1.
using Lit = int;

/// 3-CNF formula; every clause has exactly three (possibly repeated) literals.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<Lit, 3>> clauses;
};

}  // namespace tokendig
