#include "onethree/qaoa.hpp"

#include <algorithm>
#include <stdexcept>

namespace onethree {

SharedEvaluation evaluate_shared(std::span<const PreparedProblem> problems, const QaoaParams& params) {
  SharedEvaluation out;
  const auto count = static_cast<int>(problems.size());
  out.energies.resize(count);
  out.success_probs.resize(count);
  const Schedule sched = params.as_schedule();
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const RunResult r = run_layers(problems[i], sched);
    out.energies[i] = r.energy;
    out.success_probs[i] = r.success_prob;
  }
  for (int i = 0; i < count; ++i) {
    out.mean_energy += out.energies[i];
    out.mean_success += out.success_probs[i];
  }
  if (count > 0) {
    out.mean_energy /= count;
    out.mean_success /= count;
  }
  return out;
}

double mean_energy(std::span<const PreparedProblem> problems, const QaoaParams& params) {
  return evaluate_shared(problems, params).mean_energy;
}

QaoaParams interpolate_params(const QaoaParams& params, int layers) {
  const int p = params.layers();
  if (p < 1 || layers < 1) throw std::invalid_argument("interpolate_params: empty angle sequence");
  const auto resample = [&](const std::vector<double>& v) {
    std::vector<double> out(layers);
    for (int j = 0; j < layers; ++j) {
      if (p == 1 || layers == 1) {
        out[j] = p == 1 ? v[0] : v[(p - 1) / 2];
        continue;
      }
      const double pos = static_cast<double>(j) * (p - 1) / (layers - 1);
      const int lo = std::min(static_cast<int>(pos), p - 2);
      const double t = pos - lo;
      out[j] = (1.0 - t) * v[lo] + t * v[lo + 1];
    }
    return out;
  };
  return {resample(params.betas), resample(params.gammas)};
}

namespace {

// Packed as [β₁…β_N, γ₁…γ_N].
std::vector<double> pack(const QaoaParams& p) {
  std::vector<double> x(p.betas);
  x.insert(x.end(), p.gammas.begin(), p.gammas.end());
  return x;
}

QaoaParams unpack(std::span<const double> x, int layers) {
  QaoaParams p;
  p.betas.assign(x.begin(), x.begin() + layers);
  p.gammas.assign(x.begin() + layers, x.end());
  return p;
}

}  // namespace

TrainReport train_shared_qaoa(std::span<const PreparedProblem> training, int layers,
                              const QaoaTrainConfig& config) {
  if (training.empty()) throw std::invalid_argument("train_shared_qaoa: empty training set");
  const QaoaParams init = QaoaParams::from_schedule(make_qaoa_initial_schedule(layers, config.init_c));
  const Objective objective = [&](std::span<const double> x) { return mean_energy(training, unpack(x, layers)); };

  OptimResult opt = quasi_newton_minimize(objective, pack(init), config.bfgs);
  TrainReport report;
  report.initial_mean_energy = opt.trajectory.front();
  if (config.warm_start) {
    OptimResult warm = quasi_newton_minimize(objective, pack(interpolate_params(*config.warm_start, layers)),
                                             config.bfgs);
    if (warm.value < opt.value) {
      opt = std::move(warm);
      report.from_warm_start = true;
    }
  }
  report.final_mean_energy = opt.value;
  report.iterations = opt.iterations;
  report.status = opt.status;
  report.params = unpack(opt.x, layers);
  return report;
}

}  // namespace onethree
