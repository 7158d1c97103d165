#pragma once

// Data-parallel statevector kernels. Every kernel exists twice with the same
// signature: `serial` is the straightforward reference used by the tests and
// `omp` is the OpenMP version the library calls. Element-wise kernels agree
// exactly; reductions agree to rounding.

#include <complex>
#include <cstdint>
#include <span>

namespace onethree::kernels {

using Amplitude = std::complex<double>;

// Truth of one residual pair on basis state s: literal i is true iff
// parity(mask_i & s) XOR flip_i is 1, where flip_i = T_l XOR negated.
struct PairMask {
  std::uint64_t mask1 = 0;
  std::uint64_t mask2 = 0;
  std::uint8_t flip1 = 0;
  std::uint8_t flip2 = 0;
};

namespace serial {

// levels[s] = number of pairs with both literals true on |s⟩.
void diagonal_levels(std::span<const PairMask> pairs, std::span<std::uint32_t> levels);
// R_x(theta) on every qubit; amps.size() == 2^num_qubits.
void apply_rx_all(std::span<Amplitude> amps, int num_qubits, double theta);
// amps[s] *= phase_table[levels[s]].
void apply_phase_levels(std::span<Amplitude> amps, std::span<const std::uint32_t> levels,
                        std::span<const Amplitude> phase_table);
// amps[s] *= exp(i·beta·diag[s]).
void apply_diagonal_phase(std::span<Amplitude> amps, std::span<const double> diag, double beta);
double diagonal_expectation(std::span<const Amplitude> amps, std::span<const double> diag);
// Σ_{levels[s] == 0} |amps[s]|².
double zero_level_mass(std::span<const Amplitude> amps, std::span<const std::uint32_t> levels);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace serial

namespace omp {

void diagonal_levels(std::span<const PairMask> pairs, std::span<std::uint32_t> levels);
void apply_rx_all(std::span<Amplitude> amps, int num_qubits, double theta);
void apply_phase_levels(std::span<Amplitude> amps, std::span<const std::uint32_t> levels,
                        std::span<const Amplitude> phase_table);
void apply_diagonal_phase(std::span<Amplitude> amps, std::span<const double> diag, double beta);
double diagonal_expectation(std::span<const Amplitude> amps, std::span<const double> diag);
double zero_level_mass(std::span<const Amplitude> amps, std::span<const std::uint32_t> levels);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace omp

}  // namespace onethree::kernels
