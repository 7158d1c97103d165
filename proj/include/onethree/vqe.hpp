#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "onethree/hamiltonian.hpp"
#include "onethree/optim.hpp"

namespace onethree {

// ⟨H⟩ on the product state Π_i R_x(θ_i)|0…0⟩_S: every parity term contributes
// coeff·sign·Π_{i∈support} cos θ_i. Cost is linear in the total support size.
double expectation(std::span<const ParityTerm> terms, std::span<const double> theta);

// ∂E/∂θ_v = [E(θ_v + π/2) − E(θ_v − π/2)] / 2 for every v, evaluated term by
// term with prefix/suffix cosine products.
std::vector<double> gradient_parameter_shift(std::span<const ParityTerm> terms,
                                             std::span<const double> theta);

// Same rule, one component, by two full expectation evaluations.
double parameter_shift_component(std::span<const ParityTerm> terms, std::span<const double> theta,
                                 std::size_t v);

// Reference gradient: parameter_shift_component for each v in turn.
std::vector<double> gradient_parameter_shift_reference(std::span<const ParityTerm> terms,
                                                       std::span<const double> theta);

inline constexpr double kVqeGradStop = 0.1;
inline constexpr double kVqeSuccessEnergy = 0.5;

struct VqeConfig {
  NadamConfig nadam{};  // defaults: lr 0.05, 0.9/0.999, eps 1e-8, 2000 iterations, stop at ‖∇‖ < 0.1
  double success_energy = kVqeSuccessEnergy;
};

struct VqeRun {
  std::vector<double> energies;
  std::vector<double> theta;
  int iterations = 0;
  bool converged = false;
  bool success = false;

  double final_energy() const { return energies.empty() ? 0.0 : energies.back(); }
};

// One restart: θ uniform in [0, 2π)^{dim} from `seed`, then Nadam.
VqeRun run_vqe(std::span<const ParityTerm> terms, int dim, std::uint64_t seed,
               const VqeConfig& config = {});
VqeRun run_vqe(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
               std::uint64_t seed, const VqeConfig& config = {});

struct VqeBatch {
  std::vector<VqeRun> runs;
  int successes = 0;

  double success_rate() const { return runs.empty() ? 0.0 : static_cast<double>(successes) / runs.size(); }
};

// Independent restarts in parallel; restart r uses derive_seed(seed, r).
VqeBatch run_vqe_restarts(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                          std::uint64_t seed, int restarts, const VqeConfig& config = {});

struct VarianceStats {
  int n = 0;
  double ratio = 0.0;
  int trials = 0;
  std::vector<double> variances;  // one per instance used
  int skipped = 0;                // instances with no free S coordinate
  double mean_variance = 0.0;
  double stderr_variance = 0.0;
};

// Gradient-variance protocol on positive instances with T = all-ones: per
// instance one random coordinate v, `trials` uniform θ, parameter-shift
// ∂E/∂θ_v, sample variance; then the mean over instances.
VarianceStats variance_experiment(double ratio, int n, int instances, int trials, std::uint64_t seed);

}  // namespace onethree
