#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "onethree/instance.hpp"
#include "onethree/rsra.hpp"

namespace onethree {

// CNF over variables 1..n, DIMACS signed literals.
struct CnfFormula {
  int n = 0;
  std::vector<std::vector<int>> clauses;
};

// Per one-in-three clause (a, b, c): (a ∨ b ∨ c) plus pairwise (¬a ∨ ¬b),
// (¬a ∨ ¬c), (¬b ∨ ¬c); 4m clauses in total.
CnfFormula to_cnf(const Instance& inst);

void write_dimacs_cnf(std::ostream& os, const CnfFormula& f);

struct ClassicalResult {
  bool sat = false;
  std::optional<Assignment> model;
  long conflicts = 0;
  long solutions = -1;  // number of solutions when enumerated, otherwise -1
};

// DPLL with unit propagation. Branches on the variable with the most
// occurrences in not-yet-satisfied clauses (ties: lowest index), true first.
// conflicts counts empty-clause derivations.
ClassicalResult dpll_solve(const CnfFormula& f);

struct CoverSet {
  int var = 0;             // 1-based variable selected by this set
  std::vector<int> items;  // 0-based clause indices containing var
};

// Items are clauses; one candidate set per occurring variable.
struct ExactCoverProblem {
  int num_items = 0;
  int num_vars = 0;
  std::vector<CoverSet> sets;
};

// Requires a positive instance.
ExactCoverProblem to_exact_cover(const Instance& inst);

// Algorithm X on dancing links; the column with fewest candidates is chosen
// (ties: lowest index). conflicts counts dead ends (an item with no
// remaining candidate). With count_all every cover is enumerated and counted.
ClassicalResult dlx_solve(const ExactCoverProblem& p, bool count_all = false);

// Exhaustive search as a ClassicalResult (n <= 26).
ClassicalResult brute_force_solve(const Instance& inst, bool count_all = false);

// √(2^{n−k}): oracle queries of a Grover search over the reduced space.
double grover_estimate(const Reduction& red);

}  // namespace onethree
