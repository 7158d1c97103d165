#pragma once

#include <functional>
#include <vector>

namespace onethree {

// Adaptive Simpson quadrature of g over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol);

// ∫₀¹ exp(−5 s(1−s)) ds, computed once.
double schedule_normalizer();

// f(s) = c_e⁻¹ ∫₀ˢ exp(−5 s'(1−s')) ds'. Throws for s outside [0, 1].
double schedule_f(double s);

// Per-layer angles: betas drive the problem phase V_C, gammas the mixer V_B.
struct Schedule {
  std::vector<double> betas;
  std::vector<double> gammas;
  double c = 0.0;

  int layers() const { return static_cast<int>(betas.size()); }
};

inline constexpr double kQaaStep = 0.25;
inline constexpr double kQaoaInitStep = 0.5;

// β_i = c·f((i−1)/(N−1)), γ_i = c·(1 − f((i−1)/(N−1))). Requires N >= 2.
Schedule make_qaa_schedule(int layers, double c = kQaaStep);

// QAOA starting point: the QAA ramp for N >= 2; a single layer sits at the
// ramp midpoint, β = γ = c/2.
Schedule make_qaoa_initial_schedule(int layers, double c = kQaoaInitStep);

}  // namespace onethree
