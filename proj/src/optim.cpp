#include "onethree/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace onethree {

std::string status_name(OptimStatus s) {
  switch (s) {
    case OptimStatus::Converged: return "converged";
    case OptimStatus::MaxIterations: return "max_iterations";
    case OptimStatus::LineSearchFailed: return "line_search_failed";
  }
  return "unknown";
}

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string("non-finite ") + what);
}

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) require_finite(x, what);
}

}  // namespace

OptimResult nadam_minimize(const Objective& objective, const Gradient& gradient, std::vector<double> x0,
                           const NadamConfig& config) {
  OptimResult out;
  out.x = std::move(x0);
  out.value = objective(out.x);
  require_finite(out.value, "objective");
  out.trajectory.push_back(out.value);

  const std::size_t dim = out.x.size();
  std::vector<double> m(dim, 0.0);
  std::vector<double> v(dim, 0.0);
  double beta1_pow = 1.0;
  double beta2_pow = 1.0;
  for (int t = 1; t <= config.max_iterations; ++t) {
    const std::vector<double> g = gradient(out.x);
    require_finite(g, "gradient");
    if (norm2(g) < config.grad_tolerance) {
      out.status = OptimStatus::Converged;
      return out;
    }
    beta1_pow *= config.beta1;
    beta2_pow *= config.beta2;
    const double beta1_next = beta1_pow * config.beta1;
    for (std::size_t i = 0; i < dim; ++i) {
      m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g[i];
      v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g[i] * g[i];
      const double m_hat = config.beta1 * m[i] / (1.0 - beta1_next) + (1.0 - config.beta1) * g[i] / (1.0 - beta1_pow);
      const double v_hat = v[i] / (1.0 - beta2_pow);
      out.x[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
    }
    out.value = objective(out.x);
    require_finite(out.value, "objective");
    out.trajectory.push_back(out.value);
    out.iterations = t;
  }
  if (norm2(gradient(out.x)) < config.grad_tolerance) out.status = OptimStatus::Converged;
  return out;
}

std::vector<double> finite_difference_gradient(const Objective& objective, std::span<const double> x,
                                               double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = objective(probe);
    probe[i] = x[i] - h;
    const double down = objective(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

OptimResult quasi_newton_minimize(const Objective& objective, std::vector<double> x0,
                                  const BfgsConfig& config) {
  const std::size_t dim = x0.size();
  OptimResult out;
  out.x = std::move(x0);
  out.value = objective(out.x);
  require_finite(out.value, "objective");
  out.trajectory.push_back(out.value);

  // Inverse Hessian approximation, row-major.
  std::vector<double> hinv(dim * dim, 0.0);
  auto reset_identity = [&] {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) hinv[i * dim + i] = 1.0;
  };
  reset_identity();

  std::vector<double> g = finite_difference_gradient(objective, out.x, config.fd_step);
  require_finite(g, "gradient");
  std::vector<double> dir(dim), x_new(dim), s(dim), y(dim), hy(dim);
  bool first_update = true;

  for (int it = 1; it <= config.max_iterations; ++it) {
    if (norm2(g) < config.grad_tolerance) {
      out.status = OptimStatus::Converged;
      return out;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j) acc -= hinv[i * dim + j] * g[j];
      dir[i] = acc;
    }
    double slope = dot(g, dir);
    if (slope >= 0.0) {
      reset_identity();
      for (std::size_t i = 0; i < dim; ++i) dir[i] = -g[i];
      slope = dot(g, dir);
    }

    double step = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
      for (std::size_t i = 0; i < dim; ++i) x_new[i] = out.x[i] + step * dir[i];
      f_new = objective(x_new);
      if (std::isfinite(f_new) && f_new <= out.value + config.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.status = OptimStatus::LineSearchFailed;
      return out;
    }

    std::vector<double> g_new = finite_difference_gradient(objective, x_new, config.fd_step);
    require_finite(g_new, "gradient");
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = x_new[i] - out.x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12) {
      if (first_update) {
        // Scale the initial inverse Hessian to the observed curvature.
        const double scale = sy / dot(y, y);
        for (std::size_t i = 0; i < dim; ++i) hinv[i * dim + i] = scale;
        first_update = false;
      }
      for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < dim; ++j) acc += hinv[i * dim + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          hinv[i * dim + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
      }
    }

    out.x = x_new;
    out.value = f_new;
    out.trajectory.push_back(f_new);
    out.iterations = it;
    g = std::move(g_new);
  }
  out.status = norm2(g) < config.grad_tolerance ? OptimStatus::Converged : OptimStatus::MaxIterations;
  return out;
}

}  // namespace onethree
