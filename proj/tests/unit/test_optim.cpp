#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "onethree/optim.hpp"

using namespace onethree;

namespace {

double quad(std::span<const double> x) { return (x[0] - 3) * (x[0] - 3); }
std::vector<double> quad_grad(std::span<const double> x) { return {2 * (x[0] - 3)}; }

double rosen(std::span<const double> x) {
  return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("optim") {
  TEST_CASE("nadam on a quadratic") {
    NadamConfig cfg;
    cfg.grad_tolerance = 1e-6;
    cfg.max_iterations = 5000;
    const OptimResult r = nadam_minimize(quad, quad_grad, {0.0}, cfg);
    CHECK(r.x[0] == doctest::Approx(3.0).epsilon(1e-4));
    CHECK(r.status == OptimStatus::Converged);
    CHECK(r.trajectory.front() == doctest::Approx(9.0));
  }

  TEST_CASE("nadam stops at once on a zero gradient") {
    const OptimResult r = nadam_minimize(quad, quad_grad, {3.0});
    CHECK(r.x[0] == 3.0);
    CHECK(r.iterations == 0);
    CHECK(r.status == OptimStatus::Converged);
  }

  TEST_CASE("nadam rejects non-finite values") {
    const Objective bad = [](std::span<const double>) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(nadam_minimize(bad, quad_grad, {1.0}), std::domain_error);
  }

  TEST_CASE("finite differences") {
    const auto g = finite_difference_gradient(rosen, std::vector<double>{0.5, 0.2}, 1e-5);
    CHECK(g[0] == doctest::Approx(-400 * 0.5 * (0.2 - 0.25) - 2 * 0.5).epsilon(1e-6));
    CHECK(g[1] == doctest::Approx(200 * (0.2 - 0.25)).epsilon(1e-6));
  }

  TEST_CASE("bfgs on a quadratic and on Rosenbrock") {
    BfgsConfig cfg;
    cfg.fd_step = 1e-5;
    const OptimResult q = quasi_newton_minimize(quad, {-4.0}, cfg);
    CHECK(q.x[0] == doctest::Approx(3.0).epsilon(1e-5));
    CHECK(non_increasing(q.trajectory));

    const OptimResult r = quasi_newton_minimize(rosen, {-1.2, 1.0}, cfg);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(non_increasing(r.trajectory));
    CHECK(r.value <= r.trajectory.front());
  }

  TEST_CASE("bfgs from the optimum") {
    const OptimResult r = quasi_newton_minimize(quad, {3.0});
    CHECK(r.x[0] == doctest::Approx(3.0));
    CHECK(r.status == OptimStatus::Converged);
  }

  TEST_CASE("status names") {
    CHECK(status_name(OptimStatus::Converged) != status_name(OptimStatus::LineSearchFailed));
  }
}
