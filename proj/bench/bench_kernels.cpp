// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "onethree/kernels.hpp"
#include "onethree/random.hpp"

namespace k = onethree::kernels;

namespace {

struct Fixture {
  int qubits;
  std::vector<k::Amplitude> amps;
  std::vector<k::PairMask> pairs;
  std::vector<std::uint32_t> levels;
  std::vector<double> diag;
  std::vector<k::Amplitude> table;

  explicit Fixture(int q) : qubits(q), amps(std::size_t{1} << q), levels(amps.size()), diag(amps.size()) {
    onethree::CounterRng rng(static_cast<std::uint64_t>(q));
    for (auto& a : amps) a = {rng.uniform01(), rng.uniform01()};
    const std::uint64_t mask = amps.size() - 1;
    for (int i = 0; i < 2 * q; ++i) {
      pairs.push_back({rng.next() & mask, rng.next() & mask, static_cast<std::uint8_t>(rng.next() & 1),
                       static_cast<std::uint8_t>(rng.next() & 1)});
    }
    k::serial::diagonal_levels(pairs, levels);
    for (std::size_t i = 0; i < levels.size(); ++i) diag[i] = levels[i];
    for (std::size_t l = 0; l <= pairs.size(); ++l) table.push_back(std::polar(1.0, 0.1 * l));
  }
};

template <bool Parallel>
void BM_Layer(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::omp::apply_phase_levels(f.amps, f.levels, f.table);
      k::omp::apply_rx_all(f.amps, f.qubits, 0.3);
    } else {
      k::serial::apply_phase_levels(f.amps, f.levels, f.table);
      k::serial::apply_rx_all(f.amps, f.qubits, 0.3);
    }
    benchmark::DoNotOptimize(f.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
}

template <bool Parallel>
void BM_Levels(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::omp::diagonal_levels(f.pairs, f.levels);
    } else {
      k::serial::diagonal_levels(f.pairs, f.levels);
    }
    benchmark::DoNotOptimize(f.levels.data());
  }
}

template <bool Parallel>
void BM_Energy(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double e = Parallel ? k::omp::diagonal_expectation(f.amps, f.diag) : k::serial::diagonal_expectation(f.amps, f.diag);
    benchmark::DoNotOptimize(e);
  }
}

}  // namespace

BENCHMARK(BM_Layer<false>)->Name("layer/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Layer<true>)->Name("layer/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Levels<false>)->Name("levels/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Levels<true>)->Name("levels/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Energy<false>)->Name("energy/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Energy<true>)->Name("energy/omp")->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
