#include <bit>
#include <cmath>

#include "onethree/kernels.hpp"

namespace onethree::kernels::serial {

void diagonal_levels(std::span<const PairMask> pairs, std::span<std::uint32_t> levels) {
  for (std::size_t s = 0; s < levels.size(); ++s) {
    std::uint32_t count = 0;
    for (const PairMask& p : pairs) {
      const bool t1 = ((std::popcount(p.mask1 & s) & 1) ^ p.flip1) != 0;
      const bool t2 = ((std::popcount(p.mask2 & s) & 1) ^ p.flip2) != 0;
      count += (t1 && t2) ? 1U : 0U;
    }
    levels[s] = count;
  }
}

void apply_rx_all(std::span<Amplitude> amps, int num_qubits, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Amplitude off(0.0, -s);
  for (int q = 0; q < num_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & bit) continue;
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i | bit];
      amps[i] = c * a0 + off * a1;
      amps[i | bit] = off * a0 + c * a1;
    }
  }
}

void apply_phase_levels(std::span<Amplitude> amps, std::span<const std::uint32_t> levels,
                        std::span<const Amplitude> phase_table) {
  for (std::size_t s = 0; s < amps.size(); ++s) amps[s] *= phase_table[levels[s]];
}

void apply_diagonal_phase(std::span<Amplitude> amps, std::span<const double> diag, double beta) {
  for (std::size_t s = 0; s < amps.size(); ++s) amps[s] *= std::polar(1.0, beta * diag[s]);
}

double diagonal_expectation(std::span<const Amplitude> amps, std::span<const double> diag) {
  double total = 0.0;
  for (std::size_t s = 0; s < amps.size(); ++s) total += std::norm(amps[s]) * diag[s];
  return total;
}

double zero_level_mass(std::span<const Amplitude> amps, std::span<const std::uint32_t> levels) {
  double total = 0.0;
  for (std::size_t s = 0; s < amps.size(); ++s) {
    if (levels[s] == 0) total += std::norm(amps[s]);
  }
  return total;
}

double norm_squared(std::span<const Amplitude> amps) {
  double total = 0.0;
  for (const Amplitude& a : amps) total += std::norm(a);
  return total;
}

}  // namespace onethree::kernels::serial
