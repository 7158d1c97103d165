#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace onethree {

using Objective = std::function<double(std::span<const double>)>;
using Gradient = std::function<std::vector<double>(std::span<const double>)>;

enum class OptimStatus { Converged, MaxIterations, LineSearchFailed };

std::string status_name(OptimStatus s);

struct OptimResult {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> trajectory;  // objective after each accepted step, x0 first
  int iterations = 0;
  OptimStatus status = OptimStatus::MaxIterations;
};

struct NadamConfig {
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_iterations = 2000;
  double grad_tolerance = 0.1;  // stop once ‖∇‖₂ falls below this
};

// Nesterov-accelerated Adam. Throws std::domain_error on a non-finite
// objective or gradient.
OptimResult nadam_minimize(const Objective& objective, const Gradient& gradient,
                           std::vector<double> x0, const NadamConfig& config = {});

struct BfgsConfig {
  double fd_step = 0.2;          // central-difference step for the gradient
  double grad_tolerance = 1e-6;
  int max_iterations = 200;
  double armijo_c1 = 1e-4;
  int max_backtracks = 40;
};

// Central finite-difference gradient with step h.
std::vector<double> finite_difference_gradient(const Objective& objective, std::span<const double> x,
                                               double h);

// Dense BFGS on finite-difference gradients with a backtracking
// sufficient-decrease line search. Accepted objective values never increase.
OptimResult quasi_newton_minimize(const Objective& objective, std::vector<double> x0,
                                  const BfgsConfig& config = {});

}  // namespace onethree
