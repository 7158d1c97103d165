#pragma once

#include <optional>
#include <span>
#include <vector>

#include "onethree/optim.hpp"
#include "onethree/schedule.hpp"
#include "onethree/simulator.hpp"

namespace onethree {

struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  int layers() const { return static_cast<int>(betas.size()); }
  Schedule as_schedule() const { return Schedule{betas, gammas, 0.0}; }
  static QaoaParams from_schedule(const Schedule& s) { return {s.betas, s.gammas}; }
};

// Resamples the angle sequences, read as piecewise-linear functions of the
// layer position s ∈ [0, 1], onto `layers` points. One layer is held constant.
QaoaParams interpolate_params(const QaoaParams& params, int layers);

struct QaoaTrainConfig {
  double init_c = kQaoaInitStep;
  // Optional second start, usually the trained angles of a shallower circuit.
  // It is interpolated to the target depth and the start that reaches the
  // lower training energy wins.
  std::optional<QaoaParams> warm_start;
  // Simulated energies are exact, so a small difference step is used here;
  // BfgsConfig keeps the coarse 0.2 step meant for sampled objectives.
  BfgsConfig bfgs{.fd_step = 1e-4, .grad_tolerance = 1e-5, .max_iterations = 100};
};

struct TrainReport {
  double initial_mean_energy = 0.0;
  double final_mean_energy = 0.0;
  int iterations = 0;
  OptimStatus status = OptimStatus::MaxIterations;
  QaoaParams params;
  bool from_warm_start = false;
};

struct SharedEvaluation {
  std::vector<double> energies;
  std::vector<double> success_probs;
  double mean_energy = 0.0;
  double mean_success = 0.0;
};

// Runs every problem with the same parameters (in parallel over problems).
SharedEvaluation evaluate_shared(std::span<const PreparedProblem> problems, const QaoaParams& params);
double mean_energy(std::span<const PreparedProblem> problems, const QaoaParams& params);

// Minimizes the mean layered-run energy over the training problems, starting
// from the QAOA initial schedule (and the warm start, if any).
// initial_mean_energy always refers to the initial schedule. Only `training`
// is ever simulated.
TrainReport train_shared_qaoa(std::span<const PreparedProblem> training, int layers,
                              const QaoaTrainConfig& config = {});

}  // namespace onethree
