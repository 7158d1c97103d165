#include "onethree/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace onethree {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("linear_fit: size mismatch");
  const auto count = static_cast<int>(x.size());
  if (count < 2) throw std::invalid_argument("linear_fit: need at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (int i = 0; i < count; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (int i = 0; i < count; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: all x equal");
  LinearFit f;
  f.points = count;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0.0;
  for (int i = 0; i < count; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    sse += r * r;
  }
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  f.slope_stderr = count > 2 ? std::sqrt(sse / (count - 2) / sxx) : 0.0;
  return f;
}

ScalingFit fit_scaling(std::span<const std::pair<double, double>> points, int n_min) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, y] : points) {
    if (n < n_min) continue;
    if (!(y > 0.0) || !std::isfinite(y)) throw std::invalid_argument("fit_scaling: y must be positive");
    xs.push_back(n);
    ys.push_back(std::log(y));
  }
  if (xs.size() < 3) throw std::invalid_argument("fit_scaling: need at least three points with n >= n_min");
  const LinearFit lf = linear_fit(xs, ys);
  ScalingFit f;
  f.slope = lf.slope;
  f.base = std::exp(lf.slope);
  f.intercept = lf.intercept;
  f.r_squared = lf.r_squared;
  f.points_used = lf.points;
  f.n_min = n_min;
  const boost::math::students_t dist(lf.points - 2);
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  f.base_ci_low = std::exp(lf.slope - t * lf.slope_stderr);
  f.base_ci_high = std::exp(lf.slope + t * lf.slope_stderr);
  return f;
}

}  // namespace onethree
