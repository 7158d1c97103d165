#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "onethree/gf2.hpp"
#include "onethree/instance.hpp"

namespace onethree {

// A·x ≡ b (mod 2): one row per clause, the odd-in-three relaxation.
struct ParitySystem {
  Gf2Matrix a;                   // m × n
  std::vector<std::uint8_t> b;   // m
};

ParitySystem build_parity_system(const Instance& inst);

// Affine parametrization x = L·S ⊕ T of every solution of the loosened
// (odd-in-three) problem. Column j of L belongs to free variable free_vars[j];
// S index bit j is S_{j+1} (little-endian everywhere).
struct Reduction {
  int n = 0;
  int k = 0;                          // GF(2) rank of the parity system
  Gf2Matrix l;                        // n × (n − k)
  std::vector<std::uint8_t> offset;   // T, length n
  std::vector<int> free_vars;         // 1-based variable indices, increasing
  bool consistent = true;

  int dim() const { return n - k; }
};

// Reduced-row-echelon elimination of [A|b]. Pivots are the first nonzero
// column of each row (lowest index first), so L and T are canonical.
Reduction reduce(const Instance& inst);

// x = L·S ⊕ T. S has dim() entries.
Assignment decode(const Reduction& red, std::span<const std::uint8_t> s);
// Same, with S packed little-endian into an integer (dim() <= 64).
Assignment decode_index(const Reduction& red, std::uint64_t s);

// Replaces T by the all-ones vector; valid for positive instances, where
// all-ones satisfies every odd-in-three clause.
Reduction normalize_all_ones(const Reduction& red, const Instance& inst);

// Variables holding at least two variables of every clause.
struct GSet {
  std::vector<int> vars;  // 1-based, increasing

  bool contains(int var) const;
  int size() const { return static_cast<int>(vars.size()); }
};

bool is_valid_g_set(const Instance& inst, const GSet& g);

// Greedy cover: repeatedly take the variable that appears in the most clauses
// still short of two members, then drop members that became redundant.
GSet select_g_set(const Instance& inst);

enum class PairPolicy { FirstTwo, GAligned };

// Two literals per clause that must not both be true (the residual 2-SAT).
struct ResidualTwoSat {
  std::vector<std::array<Literal, 2>> pairs;
};

ResidualTwoSat residual_two_sat(const Instance& inst, PairPolicy policy,
                                const GSet* g = nullptr);

}  // namespace onethree
