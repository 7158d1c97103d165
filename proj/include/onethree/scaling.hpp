#pragma once

#include <span>
#include <utility>
#include <vector>

namespace onethree {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_stderr = 0.0;
  int points = 0;
};

// Unweighted least squares y = intercept + slope·x. Throws when fewer than
// two points are given or all x are equal.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct ScalingFit {
  double slope = 0.0;  // b in ln y = a + b·n
  double base = 1.0;   // c = exp(b)
  double intercept = 0.0;
  double r_squared = 0.0;
  double base_ci_low = 1.0;   // 95% interval for c
  double base_ci_high = 1.0;
  int points_used = 0;
  int n_min = 0;
};

// Fits ln y against n over the points with n >= n_min. Needs at least three
// such points, y > 0, and two distinct n.
ScalingFit fit_scaling(std::span<const std::pair<double, double>> points, int n_min = 0);

}  // namespace onethree
