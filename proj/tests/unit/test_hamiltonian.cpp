#include <doctest.h>

#include "fixtures.hpp"
#include "onethree/hamiltonian.hpp"

using namespace onethree;
using onethree::testing::bits_of;
using onethree::testing::i1;
using onethree::testing::i_unsat;

TEST_SUITE("hamiltonian") {
  TEST_CASE("h_q values") {
    CHECK(h_q(i1(), {0, 1, 0, 0}) == 0.0);
    CHECK(h_q(i1(), {1, 1, 1, 1}) == 8.0);
    CHECK(h_q(i1(), {0, 0, 0, 0}) == 2.0);
  }

  TEST_CASE("h_rsra values") {
    const ResidualTwoSat pairs = residual_two_sat(i1(), PairPolicy::FirstTwo);
    CHECK(h_rsra(i1(), pairs, {1, 1, 1, 1}) == 2.0);
    CHECK(h_rsra(i1(), pairs, {0, 1, 0, 0}) == 0.0);
  }

  TEST_CASE("diagonal of the two-clause example") {
    const Reduction red = reduce(i1());
    const DiagonalH d = build_diagonal(i1(), red, residual_two_sat(i1(), PairPolicy::FirstTwo));
    CHECK(d.num_qubits == 2);
    CHECK(d.values == std::vector<double>{0, 0, 0, 2});
    CHECK(d.levels == std::vector<std::uint32_t>{0, 0, 0, 2});
    CHECK(d.max_level == 2);
  }

  TEST_CASE("diagonal of the unsatisfiable example") {
    const Reduction red = reduce(i_unsat());
    const DiagonalH d = build_diagonal(i_unsat(), red, residual_two_sat(i_unsat(), PairPolicy::FirstTwo));
    CHECK(d.values == std::vector<double>{4});
  }

  TEST_CASE("diagonal budget") {
    const Instance inst = generate_random(40, 10, 1);
    const Reduction red = reduce(inst);
    CHECK_THROWS(build_diagonal(inst, red, residual_two_sat(inst, PairPolicy::FirstTwo), 8));
  }

  TEST_CASE("parity terms of the first clause") {
    const Reduction red = reduce(i1());
    const auto terms = parity_decompose(i1(), red, residual_two_sat(i1(), PairPolicy::FirstTwo));
    REQUIRE(terms.size() == 8);
    // Clause 1 with pair (x1, x2): σ_{x1} = +Z2, σ_{x2} = −Z1Z2.
    CHECK(terms[0].support.empty());
    CHECK(terms[0].coeff * terms[0].sign == doctest::Approx(0.25));
    CHECK(terms[1].support == std::vector<std::uint32_t>{1});
    CHECK(terms[1].coeff * terms[1].sign == doctest::Approx(-0.25));
    CHECK(terms[2].support == std::vector<std::uint32_t>{0, 1});
    CHECK(terms[2].coeff * terms[2].sign == doctest::Approx(0.25));
    CHECK(terms[3].support == std::vector<std::uint32_t>{0});
    CHECK(terms[3].coeff * terms[3].sign == doctest::Approx(-0.25));

    double at11 = 0.0;
    for (const auto& t : terms) at11 += t.value_at(3);
    CHECK(at11 == doctest::Approx(2.0));
  }

  TEST_CASE("parity terms reproduce the diagonal") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance inst = generate_random(16, 9, seed, seed % 3 == 0);
      const Reduction red = reduce(inst);
      if (!red.consistent || red.dim() > 12) continue;
      const auto pairs = residual_two_sat(inst, PairPolicy::FirstTwo);
      const DiagonalH d = build_diagonal(inst, red, pairs);
      const auto terms = parity_decompose(inst, red, pairs);
      CHECK(terms.size() <= 4 * static_cast<std::size_t>(inst.num_clauses()));
      for (std::uint64_t s = 0; s < d.size(); ++s) {
        double sum = 0.0;
        for (const auto& t : terms) sum += t.value_at(s);
        CHECK(sum == doctest::Approx(d.values[s]).epsilon(1e-12));
        CHECK(d.values[s] == h_rsra(inst, pairs, decode_index(red, s)));
      }
    }
  }

  TEST_CASE("zero sets agree across pair policies") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance inst = generate_random(14, 9, seed);
      const Reduction red = reduce(inst);
      const GSet g = select_g_set(inst);
      const DiagonalH a = build_diagonal(inst, red, residual_two_sat(inst, PairPolicy::FirstTwo));
      const DiagonalH b = build_diagonal(inst, red, residual_two_sat(inst, PairPolicy::GAligned, &g));
      for (std::size_t s = 0; s < a.size(); ++s) CHECK((a.levels[s] == 0) == (b.levels[s] == 0));
    }
  }

  TEST_CASE("bounds for positive instances") {
    const Instance inst = generate_random(10, 8, 4);
    const auto pairs = residual_two_sat(inst, PairPolicy::FirstTwo);
    for (std::uint64_t x = 0; x < 1024; ++x) {
      const double h = h_rsra(inst, pairs, bits_of(x, 10));
      CHECK(h >= 0.0);
      CHECK(h <= inst.num_clauses());
    }
  }
}
