#include "onethree/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "onethree/kernels.hpp"
#include "onethree/random.hpp"

namespace onethree {

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  if (num_qubits < 0 || num_qubits > 62 || amps_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
  }
}

StateVector StateVector::basis(int num_qubits, std::uint64_t s) {
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
  amps.at(s) = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const { return kernels::omp::norm_squared(amps_); }

StateVector initial_state(const Reduction& red, int qubit_budget) {
  if (!red.consistent) throw std::invalid_argument("initial_state: inconsistent reduction");
  if (red.dim() > qubit_budget) {
    throw std::invalid_argument("initial_state: n-k=" + std::to_string(red.dim()) +
                                " exceeds the simulation budget of " + std::to_string(qubit_budget));
  }
  const std::size_t size = std::size_t{1} << red.dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  return StateVector(red.dim(), std::vector<StateVector::Amplitude>(size, amp));
}

void apply_v_b(StateVector& state, double gamma) {
  kernels::omp::apply_rx_all(state.amps(), state.num_qubits(), 2.0 * gamma);
}

namespace {

void check_dims(const StateVector& state, const DiagonalH& diag, const char* who) {
  if (state.size() != diag.size()) {
    throw std::invalid_argument(std::string(who) + ": state and diagonal dimensions differ");
  }
}

}  // namespace

void apply_v_c(StateVector& state, double beta, const DiagonalH& diag) {
  check_dims(state, diag, "apply_v_c");
  if (diag.levels.size() == diag.values.size()) {
    std::vector<StateVector::Amplitude> table(diag.max_level + 1);
    for (std::uint32_t j = 0; j <= diag.max_level; ++j) table[j] = std::polar(1.0, beta * j);
    kernels::omp::apply_phase_levels(state.amps(), diag.levels, table);
  } else {
    kernels::omp::apply_diagonal_phase(state.amps(), diag.values, beta);
  }
}

double energy(const StateVector& state, const DiagonalH& diag) {
  check_dims(state, diag, "energy");
  return kernels::omp::diagonal_expectation(state.amps(), diag.values);
}

double success_probability(const StateVector& state, const DiagonalH& diag) {
  check_dims(state, diag, "success_probability");
  if (diag.levels.size() == diag.values.size()) {
    return std::clamp(kernels::omp::zero_level_mass(state.amps(), diag.levels), 0.0, 1.0);
  }
  double total = 0.0;
  for (std::size_t s = 0; s < state.size(); ++s) {
    if (diag.values[s] == 0.0) total += std::norm(state.amps()[s]);
  }
  return std::clamp(total, 0.0, 1.0);
}

PreparedProblem prepare_problem(const Instance& inst, PairPolicy policy, int qubit_budget) {
  PreparedProblem prob;
  prob.instance = inst;
  prob.reduction = reduce(inst);
  if (!prob.reduction.consistent) {
    throw std::invalid_argument("prepare_problem: parity system is inconsistent (instance is UNSAT)");
  }
  if (policy == PairPolicy::GAligned) {
    const GSet g = select_g_set(inst);
    prob.pairs = residual_two_sat(inst, policy, &g);
  } else {
    prob.pairs = residual_two_sat(inst, policy);
  }
  prob.diag = build_diagonal(inst, prob.reduction, prob.pairs, qubit_budget);
  return prob;
}

StateVector evolve(const PreparedProblem& prob, const std::vector<double>& betas,
                   const std::vector<double>& gammas) {
  if (betas.size() != gammas.size()) throw std::invalid_argument("evolve: beta/gamma length mismatch");
  StateVector state = initial_state(prob.reduction, prob.diag.num_qubits);
  for (std::size_t i = 0; i < betas.size(); ++i) {
    apply_v_c(state, betas[i], prob.diag);
    apply_v_b(state, gammas[i]);
  }
  return state;
}

RunResult run_layers(const PreparedProblem& prob, const Schedule& sched) {
  const StateVector state = evolve(prob, sched.betas, sched.gammas);
  RunResult out;
  out.energy = std::max(0.0, energy(state, prob.diag));
  out.success_prob = success_probability(state, prob.diag);
  return out;
}

RunResult run_layers(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                     const Schedule& sched, int qubit_budget) {
  if (!red.consistent) throw std::invalid_argument("run_layers: inconsistent reduction");
  PreparedProblem prob{inst, red, pairs, build_diagonal(inst, red, pairs, qubit_budget)};
  return run_layers(prob, sched);
}

std::vector<Assignment> sample(const StateVector& state, const Reduction& red, int shots,
                               std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be positive");
  if (static_cast<int>(state.num_qubits()) != red.dim()) {
    throw std::invalid_argument("sample: state and reduction dimensions differ");
  }
  std::vector<double> cdf(state.size());
  double acc = 0.0;
  for (std::size_t s = 0; s < state.size(); ++s) {
    acc += std::norm(state.amps()[s]);
    cdf[s] = acc;
  }
  CounterRng rng(seed);
  std::vector<Assignment> out;
  out.reserve(shots);
  for (int i = 0; i < shots; ++i) {
    const double u = rng.uniform01() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    const auto s = static_cast<std::uint64_t>(it - cdf.begin());
    out.push_back(decode_index(red, s));
  }
  return out;
}

}  // namespace onethree
