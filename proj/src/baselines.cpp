#include "onethree/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace onethree {

CnfFormula to_cnf(const Instance& inst) {
  CnfFormula f;
  f.n = inst.num_vars();
  f.clauses.reserve(4 * static_cast<std::size_t>(inst.num_clauses()));
  for (const Clause& c : inst.clauses()) {
    const int a = c.lits[0].signed_value();
    const int b = c.lits[1].signed_value();
    const int d = c.lits[2].signed_value();
    f.clauses.push_back({a, b, d});
    f.clauses.push_back({-a, -b});
    f.clauses.push_back({-a, -d});
    f.clauses.push_back({-b, -d});
  }
  return f;
}

void write_dimacs_cnf(std::ostream& os, const CnfFormula& f) {
  os << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
}

ExactCoverProblem to_exact_cover(const Instance& inst) {
  if (!inst.positive_only()) {
    throw std::invalid_argument("to_exact_cover: exact-cover reduction needs a positive instance");
  }
  ExactCoverProblem p;
  p.num_items = inst.num_clauses();
  p.num_vars = inst.num_vars();
  std::vector<std::vector<int>> occ(inst.num_vars() + 1);
  for (int c = 0; c < inst.num_clauses(); ++c) {
    for (const Literal& lit : inst.clause(c).lits) occ[lit.var].push_back(c);
  }
  for (int v = 1; v <= inst.num_vars(); ++v) {
    if (!occ[v].empty()) p.sets.push_back(CoverSet{v, std::move(occ[v])});
  }
  return p;
}

ClassicalResult brute_force_solve(const Instance& inst, bool count_all) {
  ClassicalResult r;
  const auto sols = brute_force_solutions(inst);
  r.sat = !sols.empty();
  if (r.sat) r.model = *sols.begin();
  if (count_all) r.solutions = static_cast<long>(sols.size());
  return r;
}

double grover_estimate(const Reduction& red) {
  if (!red.consistent) throw std::invalid_argument("grover_estimate: inconsistent reduction");
  return std::exp2(0.5 * red.dim());
}

}  // namespace onethree
