#pragma once

#include <array>

#include "logbec/model.hpp"

namespace logbec {

/// Widths below this (internal units, 1 pm at default scaling) abort a run:
/// the width equations are singular at zero and physical validity is lost
/// long before.
inline constexpr double kWidthFloor = 1e-6;

struct IntegratorSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;         // 0: no cap
  double sample_interval = 0.0;  // 0: (t_end - t0)/1000
};

/// Width accelerations of the anisotropic Gaussian ansatz under dispersion,
/// trap, contact interaction and the logarithmic term:
///   sigma_x'' = 1/(4 sx^3) - wx^2 sx + N a/(4 sqrt(pi)) / (sx^2 sy sz) - b/sx
/// and cyclic permutations (internal units). The contact term is the only
/// coupling between axes.
std::array<double, 3> rhs_anisotropic(const GaussianState& state,
                                      const BECParams& params,
                                      const std::array<double, 3>& omega);

/// Spherical reduction of rhs_anisotropic:
///   sigma'' = 1/(4 s^3) - w^2 s + N a/(4 sqrt(pi)) / s^4 - b/s
double rhs_spherical(double sigma, const BECParams& params, double omega);

/// Integrates the width equations with an embedded Dormand-Prince 5(4)
/// stepper. Integration restarts exactly at every schedule boundary; the
/// trajectory is sampled at the configured interval plus all boundary
/// instants and t_end. Throws SimulationError on width collapse (naming
/// axis and time) and StiffnessError on step-size underflow.
WidthTrajectory integrate(const GaussianState& state0, const BECParams& params,
                          const TrapSchedule& schedule, double t_end,
                          const IntegratorSettings& settings = {});

/// Energy per particle of the ansatz. For spherical states this is
///   3/2 v^2 + 3/(8 s^2) + 3/2 w^2 s^2 + N a/(4 sqrt(pi) s^3) + 3 b ln s
/// (internal units, arbitrary offset fixed to zero); anisotropic states use
/// the per-axis first integral that reduces to the above on the diagonal.
double energy_per_particle(const GaussianState& state, const BECParams& params,
                           const std::array<double, 3>& omega = {0.0, 0.0, 0.0});

/// Ratio of the initial kinetic + pressure + contact energy to the log
/// strength. Requires b != 0 and a spherical state.
double chi(const GaussianState& state0, const BECParams& params);

/// A-priori width bound sigma(0) * exp(chi) for b > 0.
double sigma_max(const GaussianState& state0, const BECParams& params);

/// Equilibrium (solitonic) width 1/(2 sqrt(b)) for b > 0, the N = 0
/// stationary point of the spherical width equation.
double gausson_width(const BECParams& params);

}  // namespace logbec
