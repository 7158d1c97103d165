#include <bit>
#include <cmath>
#include <cstddef>

#include "onethree/kernels.hpp"

namespace onethree::kernels::omp {

namespace {

// Below this many amplitudes the fork/join cost dominates.
constexpr std::ptrdiff_t kParallelThreshold = std::ptrdiff_t{1} << 14;

}  // namespace

void diagonal_levels(std::span<const PairMask> pairs, std::span<std::uint32_t> levels) {
  const auto size = static_cast<std::ptrdiff_t>(levels.size());
  const PairMask* pp = pairs.data();
  const std::size_t np = pairs.size();
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold / 4)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    const auto s = static_cast<std::uint64_t>(i);
    std::uint32_t count = 0;
    for (std::size_t j = 0; j < np; ++j) {
      const unsigned t1 = (std::popcount(pp[j].mask1 & s) & 1U) ^ pp[j].flip1;
      const unsigned t2 = (std::popcount(pp[j].mask2 & s) & 1U) ^ pp[j].flip2;
      count += t1 & t2;
    }
    levels[i] = count;
  }
}

void apply_rx_all(std::span<Amplitude> amps, int num_qubits, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const auto half = static_cast<std::ptrdiff_t>(amps.size() / 2);
  // std::complex<double> is layout-compatible with double[2].
  double* data = reinterpret_cast<double*>(amps.data());
  for (int q = 0; q < num_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t low = bit - 1;
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (std::ptrdiff_t j = 0; j < half; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const std::size_t i0 = ((uj & ~low) << 1) | (uj & low);
      const std::size_t i1 = i0 | bit;
      const double re0 = data[2 * i0], im0 = data[2 * i0 + 1];
      const double re1 = data[2 * i1], im1 = data[2 * i1 + 1];
      data[2 * i0] = c * re0 + s * im1;
      data[2 * i0 + 1] = c * im0 - s * re1;
      data[2 * i1] = s * im0 + c * re1;
      data[2 * i1 + 1] = -s * re0 + c * im1;
    }
  }
}

void apply_phase_levels(std::span<Amplitude> amps, std::span<const std::uint32_t> levels,
                        std::span<const Amplitude> phase_table) {
  const auto size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
  for (std::ptrdiff_t s = 0; s < size; ++s) amps[s] *= phase_table[levels[s]];
}

void apply_diagonal_phase(std::span<Amplitude> amps, std::span<const double> diag, double beta) {
  const auto size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold / 4)
  for (std::ptrdiff_t s = 0; s < size; ++s) amps[s] *= std::polar(1.0, beta * diag[s]);
}

double diagonal_expectation(std::span<const Amplitude> amps, std::span<const double> diag) {
  const auto size = static_cast<std::ptrdiff_t>(amps.size());
  double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (size >= kParallelThreshold)
  for (std::ptrdiff_t s = 0; s < size; ++s) total += std::norm(amps[s]) * diag[s];
  return total;
}

double zero_level_mass(std::span<const Amplitude> amps, std::span<const std::uint32_t> levels) {
  const auto size = static_cast<std::ptrdiff_t>(amps.size());
  double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (size >= kParallelThreshold)
  for (std::ptrdiff_t s = 0; s < size; ++s) {
    if (levels[s] == 0) total += std::norm(amps[s]);
  }
  return total;
}

double norm_squared(std::span<const Amplitude> amps) {
  const auto size = static_cast<std::ptrdiff_t>(amps.size());
  double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (size >= kParallelThreshold)
  for (std::ptrdiff_t s = 0; s < size; ++s) total += std::norm(amps[s]);
  return total;
}

}  // namespace onethree::kernels::omp
