#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "onethree/instance.hpp"

namespace onethree::testing {

inline Instance make_instance(int n, std::initializer_list<std::array<int, 3>> clauses) {
  std::vector<Clause> cs;
  for (const auto& c : clauses) {
    cs.push_back(Clause{{Literal::from_signed(c[0]), Literal::from_signed(c[1]), Literal::from_signed(c[2])}});
  }
  return Instance(n, std::move(cs));
}

// Two overlapping clauses on four variables; three solutions.
inline Instance i1() { return make_instance(4, {{1, 2, 3}, {2, 3, 4}}); }

// Every 3-subset of four variables; no solution.
inline Instance i_unsat() { return make_instance(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }

inline Assignment bits_of(std::uint64_t x, int n) {
  Assignment a(n);
  for (int i = 0; i < n; ++i) a[i] = (x >> i) & 1U;
  return a;
}

// Every assignment with an odd number of true literals in each clause.
inline std::set<Assignment> brute_force_loosened(const Instance& inst) {
  std::set<Assignment> out;
  const int n = inst.num_vars();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Assignment a = bits_of(x, n);
    bool ok = true;
    for (const Clause& c : inst.clauses()) {
      int t = 0;
      for (const Literal& l : c.lits) t += literal_value(l, a) ? 1 : 0;
      if (t % 2 == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

}  // namespace onethree::testing
