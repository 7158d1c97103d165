#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "onethree/random.hpp"
#include "onethree/rsra.hpp"

using namespace onethree;
using onethree::testing::bits_of;
using onethree::testing::brute_force_loosened;
using onethree::testing::i1;
using onethree::testing::i_unsat;
using onethree::testing::make_instance;

namespace {

std::set<Assignment> decoded_set(const Reduction& red) {
  std::set<Assignment> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << red.dim()); ++s) out.insert(decode_index(red, s));
  return out;
}

std::vector<std::string> l_rows(const Reduction& red) {
  std::vector<std::string> rows;
  for (int v = 0; v < red.n; ++v) {
    std::string r;
    for (int c = 0; c < red.dim(); ++c) r.push_back(red.l.get(v, c) ? '1' : '0');
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_SUITE("rsra") {
  TEST_CASE("gf2 matrix basics") {
    Gf2Matrix m(3, 70);
    m.set(0, 0, true);
    m.set(0, 69, true);
    m.set(1, 69, true);
    m.set(2, 0, true);
    CHECK(m.get(0, 69));
    CHECK(m.row_weight(0) == 2);
    CHECK(m.col_weight(69) == 2);
    CHECK(m.rank() == 2);
    m.xor_row(0, 1);
    CHECK_FALSE(m.get(0, 69));
    CHECK(m.find_next_in_row(1, 0) == 69);
    m.flip(2, 0);
    CHECK(m.row_is_zero(2));
  }

  TEST_CASE("parity system") {
    const ParitySystem ps = build_parity_system(i1());
    CHECK(ps.a.get(0, 0));
    CHECK(ps.a.get(0, 1));
    CHECK(ps.a.get(0, 2));
    CHECK_FALSE(ps.a.get(0, 3));
    CHECK_FALSE(ps.a.get(1, 0));
    CHECK(ps.a.get(1, 3));
    CHECK(ps.b == std::vector<std::uint8_t>{1, 1});
    CHECK(build_parity_system(make_instance(3, {{-1, 2, 3}})).b == std::vector<std::uint8_t>{0});
  }

  TEST_CASE("reduction of the two-clause example") {
    const Reduction red = reduce(i1());
    CHECK(red.consistent);
    CHECK(red.k == 2);
    CHECK(red.free_vars == std::vector<int>{3, 4});
    CHECK(l_rows(red) == std::vector<std::string>{"01", "11", "10", "01"});
    CHECK(red.offset == std::vector<std::uint8_t>{0, 1, 0, 0});
    CHECK(decode(red, std::vector<std::uint8_t>{0, 0}) == Assignment{0, 1, 0, 0});
    CHECK(decode(red, std::vector<std::uint8_t>{1, 1}) == Assignment{1, 1, 1, 1});
    CHECK(decoded_set(red) == brute_force_loosened(i1()));
    CHECK_THROWS(decode(red, std::vector<std::uint8_t>{0}));
  }

  TEST_CASE("reduction of the unsatisfiable example") {
    const Reduction red = reduce(i_unsat());
    CHECK(red.consistent);
    CHECK(red.k == 4);
    CHECK(red.dim() == 0);
    CHECK(decode_index(red, 0) == Assignment{1, 1, 1, 1});
  }

  TEST_CASE("inconsistent parity system") {
    // x1+x2+x3 odd and (¬x1)+x2+x3 odd cannot both hold.
    const Reduction red = reduce(make_instance(3, {{1, 2, 3}, {-1, 2, 3}}));
    CHECK_FALSE(red.consistent);
    CHECK_THROWS(decode_index(red, 0));
  }

  TEST_CASE("free-variable rows form an identity block") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Instance inst = generate_random(14, 9, s, s % 2 == 0);
      const Reduction red = reduce(inst);
      if (!red.consistent) continue;
      for (int j = 0; j < red.dim(); ++j) {
        const int row = red.free_vars[j] - 1;
        for (int c = 0; c < red.dim(); ++c) CHECK(red.l.get(row, c) == (c == j));
      }
      CHECK(std::is_sorted(red.free_vars.begin(), red.free_vars.end()));
    }
  }

  TEST_CASE("row shuffle leaves the solution set unchanged") {
    const Instance inst = generate_random(13, 8, 77, false);
    std::vector<Clause> cs = inst.clauses();
    std::reverse(cs.begin(), cs.end());
    const Instance shuffled(inst.num_vars(), cs);
    const Reduction a = reduce(inst);
    const Reduction b = reduce(shuffled);
    CHECK(a.k == b.k);
    CHECK(a.consistent == b.consistent);
    if (a.consistent) CHECK(decoded_set(a) == decoded_set(b));
  }

  TEST_CASE("all-ones normalization") {
    const Reduction red = normalize_all_ones(reduce(i1()), i1());
    CHECK(red.offset == std::vector<std::uint8_t>{1, 1, 1, 1});
    CHECK(decoded_set(red) == decoded_set(reduce(i1())));
    const Reduction again = normalize_all_ones(red, i1());
    CHECK(again.offset == red.offset);
    CHECK_THROWS(normalize_all_ones(reduce(make_instance(3, {{-1, 2, 3}})), make_instance(3, {{-1, 2, 3}})));
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Instance inst = generate_random(12, 7, s);
      const Reduction r = reduce(inst);
      CHECK(decoded_set(normalize_all_ones(r, inst)) == decoded_set(r));
    }
  }

  TEST_CASE("residual pairs") {
    const ResidualTwoSat first = residual_two_sat(i1(), PairPolicy::FirstTwo);
    REQUIRE(first.pairs.size() == 2);
    CHECK(first.pairs[0][0].var == 1);
    CHECK(first.pairs[0][1].var == 2);
    CHECK(first.pairs[1][0].var == 2);
    CHECK(first.pairs[1][1].var == 3);

    const GSet g{{2, 3}};
    const ResidualTwoSat aligned = residual_two_sat(i1(), PairPolicy::GAligned, &g);
    for (const auto& p : aligned.pairs) {
      CHECK(p[0].var == 2);
      CHECK(p[1].var == 3);
    }
    const GSet bad{{1}};
    CHECK_THROWS(residual_two_sat(i1(), PairPolicy::GAligned, &bad));
    CHECK_THROWS(residual_two_sat(i1(), PairPolicy::GAligned, nullptr));

    // Within the loosened space, "pair not both true" is the one-in-three condition.
    const Reduction red = reduce(i1());
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Assignment a = decode_index(red, s);
      bool pairs_ok = true;
      for (const auto& p : first.pairs) pairs_ok &= !(literal_value(p[0], a) && literal_value(p[1], a));
      CHECK(pairs_ok == is_satisfying(i1(), a));
    }
  }

  TEST_CASE("G set selection") {
    const GSet g = select_g_set(i1());
    CHECK(g.size() == 2);
    CHECK(is_valid_g_set(i1(), g));
    CHECK(select_g_set(make_instance(3, {{1, 2, 3}})).size() == 2);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Instance inst = generate_random(30, 19, s);
      CHECK(is_valid_g_set(inst, select_g_set(inst)));
    }
  }
}
