#include "onethree/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "onethree/random.hpp"
#include "onethree/rsra.hpp"

namespace onethree {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kTwoPi = 2 * std::numbers::pi;

void check_support(std::span<const ParityTerm> terms, std::size_t dim) {
  for (const ParityTerm& t : terms) {
    if (!t.support.empty() && t.support.back() >= dim) {
      throw std::invalid_argument("vqe: parity term support exceeds theta length " + std::to_string(dim));
    }
  }
}

}  // namespace

double expectation(std::span<const ParityTerm> terms, std::span<const double> theta) {
  check_support(terms, theta.size());
  std::vector<double> cosines(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) cosines[i] = std::cos(theta[i]);
  double total = 0.0;
  for (const ParityTerm& t : terms) {
    double prod = t.coeff * t.sign;
    for (std::uint32_t i : t.support) prod *= cosines[i];
    total += prod;
  }
  return total;
}

std::vector<double> gradient_parameter_shift(std::span<const ParityTerm> terms,
                                             std::span<const double> theta) {
  check_support(terms, theta.size());
  const std::size_t dim = theta.size();
  std::vector<double> cosines(dim), shift_diff(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    cosines[i] = std::cos(theta[i]);
    shift_diff[i] = 0.5 * (std::cos(theta[i] + kHalfPi) - std::cos(theta[i] - kHalfPi));
  }
  std::vector<double> grad(dim, 0.0);
  std::vector<double> suffix;
  for (const ParityTerm& t : terms) {
    const std::size_t w = t.support.size();
    if (w == 0) continue;
    suffix.assign(w + 1, 1.0);
    for (std::size_t j = w; j-- > 0;) suffix[j] = suffix[j + 1] * cosines[t.support[j]];
    double prefix = t.coeff * t.sign;
    for (std::size_t j = 0; j < w; ++j) {
      const std::uint32_t v = t.support[j];
      grad[v] += prefix * suffix[j + 1] * shift_diff[v];
      prefix *= cosines[v];
    }
  }
  return grad;
}

double parameter_shift_component(std::span<const ParityTerm> terms, std::span<const double> theta,
                                 std::size_t v) {
  std::vector<double> shifted(theta.begin(), theta.end());
  shifted[v] = theta[v] + kHalfPi;
  const double up = expectation(terms, shifted);
  shifted[v] = theta[v] - kHalfPi;
  const double down = expectation(terms, shifted);
  return 0.5 * (up - down);
}

std::vector<double> gradient_parameter_shift_reference(std::span<const ParityTerm> terms,
                                                       std::span<const double> theta) {
  std::vector<double> grad(theta.size());
  for (std::size_t v = 0; v < theta.size(); ++v) grad[v] = parameter_shift_component(terms, theta, v);
  return grad;
}

VqeRun run_vqe(std::span<const ParityTerm> terms, int dim, std::uint64_t seed, const VqeConfig& config) {
  CounterRng rng(seed);
  std::vector<double> theta0(dim);
  for (double& t : theta0) t = kTwoPi * rng.uniform01();

  const auto objective = [&](std::span<const double> th) { return expectation(terms, th); };
  const auto gradient = [&](std::span<const double> th) { return gradient_parameter_shift(terms, th); };
  OptimResult opt = nadam_minimize(objective, gradient, std::move(theta0), config.nadam);

  VqeRun run;
  run.energies = std::move(opt.trajectory);
  run.theta = std::move(opt.x);
  run.iterations = opt.iterations;
  run.converged = opt.status == OptimStatus::Converged;
  run.success = run.final_energy() < config.success_energy;
  return run;
}

VqeRun run_vqe(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs, std::uint64_t seed,
               const VqeConfig& config) {
  if (!red.consistent) throw std::invalid_argument("run_vqe: inconsistent reduction");
  const std::vector<ParityTerm> terms = parity_decompose(inst, red, pairs);
  return run_vqe(terms, red.dim(), seed, config);
}

VqeBatch run_vqe_restarts(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                          std::uint64_t seed, int restarts, const VqeConfig& config) {
  if (!red.consistent) throw std::invalid_argument("run_vqe_restarts: inconsistent reduction");
  const std::vector<ParityTerm> terms = parity_decompose(inst, red, pairs);
  VqeBatch batch;
  batch.runs.resize(restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < restarts; ++r) {
    batch.runs[r] = run_vqe(terms, red.dim(), derive_seed(seed, static_cast<std::uint64_t>(r)), config);
  }
  for (const VqeRun& run : batch.runs) batch.successes += run.success ? 1 : 0;
  return batch;
}

VarianceStats variance_experiment(double ratio, int n, int instances, int trials, std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("variance_experiment: need at least 2 trials");
  const int m = static_cast<int>(std::lround(ratio * n));
  VarianceStats stats;
  stats.n = n;
  stats.ratio = ratio;
  stats.trials = trials;

  std::vector<double> per_instance(instances, std::numeric_limits<double>::quiet_NaN());
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < instances; ++idx) {
    const std::uint64_t key = derive_seed(seed, static_cast<std::uint64_t>(idx));
    const Instance inst = generate_random(n, m, derive_seed(key, 0));
    const Reduction red = normalize_all_ones(reduce(inst), inst);
    if (red.dim() == 0) continue;
    const std::vector<ParityTerm> terms =
        parity_decompose(inst, red, residual_two_sat(inst, PairPolicy::FirstTwo));

    CounterRng rng(derive_seed(key, 1));
    const auto v = static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(red.dim())));
    std::vector<double> theta(red.dim());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
      for (double& th : theta) th = kTwoPi * rng.uniform01();
      const double g = parameter_shift_component(terms, theta, v);
      sum += g;
      sum_sq += g * g;
    }
    const double mean = sum / trials;
    per_instance[idx] = std::max(0.0, (sum_sq - trials * mean * mean) / (trials - 1));
  }

  for (double v : per_instance) {
    if (std::isnan(v)) {
      ++stats.skipped;
    } else {
      stats.variances.push_back(v);
    }
  }
  const auto used = static_cast<double>(stats.variances.size());
  if (used > 0) {
    double s = 0.0;
    for (double v : stats.variances) s += v;
    stats.mean_variance = s / used;
    double ss = 0.0;
    for (double v : stats.variances) ss += (v - stats.mean_variance) * (v - stats.mean_variance);
    stats.stderr_variance = used > 1 ? std::sqrt(ss / (used - 1) / used) : 0.0;
  }
  return stats;
}

}  // namespace onethree
