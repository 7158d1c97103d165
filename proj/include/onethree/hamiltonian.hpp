#pragma once

#include <cstdint>
#include <vector>

#include "onethree/instance.hpp"
#include "onethree/rsra.hpp"

namespace onethree {

// Σ_p (W_{p,1} + W_{p,2} + W_{p,3} − 1)².
double h_q(const Instance& inst, const Assignment& a);

// Σ_p W_{p,1}·W_{p,2} over the chosen pairs.
double h_rsra(const Instance& inst, const ResidualTwoSat& pairs, const Assignment& a);

// H_RSRA evaluated on every point of the S representation.
// values[s] = h_rsra(decode_index(s)); levels holds the same integers.
struct DiagonalH {
  int num_qubits = 0;
  std::vector<double> values;
  std::vector<std::uint32_t> levels;
  std::uint32_t max_level = 0;

  std::size_t size() const { return values.size(); }
};

inline constexpr int kDefaultQubitBudget = 28;

DiagonalH build_diagonal(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                         int qubit_budget = kDefaultQubitBudget);

// coeff · sign · Π_{i ∈ support} Z_i, in the S representation.
struct ParityTerm {
  double coeff = 0.0;
  int sign = 1;                       // (−1)^{T} factors of the literals involved
  std::vector<std::uint32_t> support; // S coordinates carrying a Z, increasing

  // Value on computational basis state |s⟩ (dim <= 64).
  double value_at(std::uint64_t s) const;
};

// Expands each pair product (1 − q₁σ₁)(1 − q₂σ₂)/4 with σ_l = (−1)^{T_l} Z^{L_l}
// into at most four parity terms.
std::vector<ParityTerm> parity_decompose(const Instance& inst, const Reduction& red,
                                         const ResidualTwoSat& pairs);

}  // namespace onethree
