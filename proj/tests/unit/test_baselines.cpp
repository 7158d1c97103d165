#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "onethree/baselines.hpp"

using namespace onethree;
using onethree::testing::i1;
using onethree::testing::i_unsat;
using onethree::testing::make_instance;

namespace {

bool satisfies_cnf(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool any = false;
    for (int lit : clause) any = any || ((a[std::abs(lit) - 1] != 0) == (lit > 0));
    if (!any) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("baselines") {
  TEST_CASE("cnf encoding") {
    const CnfFormula f = to_cnf(i1());
    CHECK(f.n == 4);
    CHECK(f.clauses.size() == 8);
    CHECK(f.clauses[0] == std::vector<int>{1, 2, 3});
    for (std::uint64_t x = 0; x < 16; ++x) {
      const Assignment a = onethree::testing::bits_of(x, 4);
      CHECK(satisfies_cnf(f, a) == is_satisfying(i1(), a));
    }
    std::ostringstream os;
    write_dimacs_cnf(os, f);
    CHECK(os.str().rfind("p cnf 4 8\n", 0) == 0);
    CHECK(os.str().find("-1 -2 0\n") != std::string::npos);
  }

  TEST_CASE("dpll") {
    const ClassicalResult r = dpll_solve(to_cnf(i1()));
    REQUIRE(r.sat);
    REQUIRE(r.model.has_value());
    CHECK(is_satisfying(i1(), *r.model));

    const ClassicalResult u = dpll_solve(to_cnf(i_unsat()));
    CHECK_FALSE(u.sat);
    CHECK(u.conflicts >= 1);

    const ClassicalResult empty = dpll_solve(CnfFormula{3, {}});
    CHECK(empty.sat);
    CHECK(empty.conflicts == 0);

    CHECK_THROWS(dpll_solve(CnfFormula{2, {{}}}));
    CHECK_THROWS(dpll_solve(CnfFormula{2, {{1, 3}}}));
  }

  TEST_CASE("dpll agrees with brute force") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Instance inst = generate_random(10, 4 + static_cast<int>(seed % 6), seed, seed % 2 == 0);
      const ClassicalResult d = dpll_solve(to_cnf(inst));
      CHECK(d.sat == !brute_force_solutions(inst).empty());
      if (d.sat) CHECK(is_satisfying(inst, *d.model));
    }
  }

  TEST_CASE("exact cover") {
    const ExactCoverProblem p = to_exact_cover(i1());
    CHECK(p.num_items == 2);
    CHECK(p.sets.size() == 4);
    CHECK(p.sets[0].items == std::vector<int>{0});
    CHECK(p.sets[1].items == std::vector<int>{0, 1});
    CHECK(p.sets[3].items == std::vector<int>{1});

    const ClassicalResult all = dlx_solve(p, true);
    CHECK(all.sat);
    CHECK(all.solutions == 3);
    CHECK(is_satisfying(i1(), *all.model));

    const ClassicalResult u = dlx_solve(to_exact_cover(i_unsat()));
    CHECK_FALSE(u.sat);
    CHECK(u.conflicts >= 1);

    CHECK(dlx_solve(ExactCoverProblem{0, 2, {}}).sat);
    CHECK_THROWS(to_exact_cover(make_instance(3, {{-1, 2, 3}})));
  }

  TEST_CASE("brute force counts") {
    const ClassicalResult r = brute_force_solve(i1(), true);
    CHECK(r.solutions == 3);
    CHECK_FALSE(brute_force_solve(i_unsat()).sat);
  }

  TEST_CASE("grover query estimate") {
    CHECK(grover_estimate(reduce(i1())) == doctest::Approx(2.0));
    CHECK(grover_estimate(reduce(i_unsat())) == doctest::Approx(1.0));
  }
}
