#include "onethree/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace onethree {

namespace {

double simpson_step(const std::function<double(double)>& g, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrand(double s) { return std::exp(-5.0 * s * (1.0 - s)); }

constexpr double kQuadTol = 1e-10;

}  // namespace

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = g(a);
  const double fb = g(b);
  const double fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(g, a, b, fa, fm, fb, whole, tol, 50);
}

double schedule_normalizer() {
  static const double ce = adaptive_simpson(integrand, 0.0, 1.0, kQuadTol * 1e-2);
  return ce;
}

double schedule_f(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("schedule_f: s=" + std::to_string(s) + " outside [0, 1]");
  }
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 1.0;
  // The integrand is symmetric about 1/2, so f(1 − s) = 1 − f(s).
  if (s > 0.5) return 1.0 - schedule_f(1.0 - s);
  if (s == 0.5) return 0.5;
  return adaptive_simpson(integrand, 0.0, s, kQuadTol * 1e-2) / schedule_normalizer();
}

Schedule make_qaa_schedule(int layers, double c) {
  if (layers < 2) throw std::invalid_argument("make_qaa_schedule: need at least 2 layers");
  Schedule out;
  out.c = c;
  out.betas.resize(layers);
  out.gammas.resize(layers);
  for (int i = 0; i < layers; ++i) {
    const double f = schedule_f(static_cast<double>(i) / (layers - 1));
    out.betas[i] = c * f;
    out.gammas[i] = c * (1.0 - f);
  }
  return out;
}

Schedule make_qaoa_initial_schedule(int layers, double c) {
  if (layers < 1) throw std::invalid_argument("make_qaoa_initial_schedule: need at least 1 layer");
  if (layers >= 2) return make_qaa_schedule(layers, c);
  return Schedule{{0.5 * c}, {0.5 * c}, c};
}

}  // namespace onethree
