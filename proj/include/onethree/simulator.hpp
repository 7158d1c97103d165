#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "onethree/hamiltonian.hpp"
#include "onethree/instance.hpp"
#include "onethree/rsra.hpp"
#include "onethree/schedule.hpp"

namespace onethree {

// Amplitudes over the 2^{n−k} points of the S representation.
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  StateVector() = default;
  StateVector(int num_qubits, std::vector<Amplitude> amps);

  // |s⟩ for a single S index.
  static StateVector basis(int num_qubits, std::uint64_t s);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::vector<Amplitude>& amps() { return amps_; }
  const std::vector<Amplitude>& amps() const { return amps_; }
  double norm_squared() const;

 private:
  int num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// Uniform superposition of every loosened-problem solution (|+⟩^{⊗(n−k)} in S).
StateVector initial_state(const Reduction& red, int qubit_budget = kDefaultQubitBudget);

// V_B(γ) = Π_i G_x(2γ, i), an R_x(2γ) on every S qubit.
void apply_v_b(StateVector& state, double gamma);

// V_C(β) = exp(+iβ H_RSRA), diagonal in S.
void apply_v_c(StateVector& state, double beta, const DiagonalH& diag);

double energy(const StateVector& state, const DiagonalH& diag);
double success_probability(const StateVector& state, const DiagonalH& diag);

struct RunResult {
  double energy = 0.0;
  double success_prob = 0.0;
  std::optional<std::vector<Assignment>> samples;
};

// Everything a layered run needs that depends only on the instance.
struct PreparedProblem {
  Instance instance;
  Reduction reduction;
  ResidualTwoSat pairs;
  DiagonalH diag;
};

PreparedProblem prepare_problem(const Instance& inst, PairPolicy policy = PairPolicy::FirstTwo,
                                int qubit_budget = kDefaultQubitBudget);

// Applies V_C(β_i) then V_B(γ_i) for i = 1..N to the initial state.
StateVector evolve(const PreparedProblem& prob, const std::vector<double>& betas,
                   const std::vector<double>& gammas);

RunResult run_layers(const PreparedProblem& prob, const Schedule& sched);
RunResult run_layers(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                     const Schedule& sched, int qubit_budget = kDefaultQubitBudget);

// Draws S indices from |amps|² and decodes them.
std::vector<Assignment> sample(const StateVector& state, const Reduction& red, int shots,
                               std::uint64_t seed);

}  // namespace onethree
