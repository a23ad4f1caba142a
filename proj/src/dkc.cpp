#include "logbec/dkc.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "logbec/errors.hpp"

namespace logbec {

void KickSpec::validate() const {
  if (!(t_kick > 0.0))
    throw ConfigError("kick: t_kick must be > 0");
  if (!(duration > 0.0))
    throw ConfigError("kick: duration must be > 0");
  // Not an error: the thin-lens picture just degrades gracefully.
  if (duration >= t_kick / 10.0)
    std::fprintf(stderr,
                 "warning: kick duration %.3g is not small against t_kick "
                 "%.3g; thin-lens reading is poor\n",
                 duration, t_kick);
}

double collimation_frequency(const GaussianState& state_at_kick,
                             double duration) {
  if (!state_at_kick.is_spherical())
    throw std::domain_error(
        "collimation_frequency: requires a spherical state");
  const double s = state_at_kick.sigma[0];
  const double v = state_at_kick.sigma_rate[0];
  if (!(s > 0.0))
    throw std::domain_error("collimation_frequency: width must be > 0");
  if (!(v > 0.0))
    throw std::domain_error(
        "collimation_frequency: nothing to collimate (rate <= 0)");
  if (!(duration > 0.0))
    throw std::domain_error("collimation_frequency: duration must be > 0");
  return std::sqrt(v / (s * duration));
}

GaussianState apply_thin_lens(const GaussianState& state, double omega,
                              double duration) {
  GaussianState out = state;
  const double impulse = omega * omega * duration;
  for (int i = 0; i < 3; ++i) {
    out.sigma_rate[i] = state.sigma_rate[i] - impulse * state.sigma[i];
    out.beta[i] = -out.sigma_rate[i] / (2.0 * out.sigma[i]);
  }
  out.t = state.t + duration;
  return out;
}

GaussianState apply_finite_pulse(const GaussianState& state, double omega,
                                 double duration, const BECParams& params,
                                 const IntegratorSettings& settings) {
  if (!(duration > 0.0))
    throw std::domain_error("apply_finite_pulse: duration must be > 0");
  TrapSchedule pulse({TrapSegment{state.t, state.t + duration,
                                  {omega, omega, omega}}});
  IntegratorSettings s = settings;
  s.sample_interval = duration;  // endpoints only
  const WidthTrajectory traj =
      integrate(state, params, pulse, state.t + duration, s);
  GaussianState out;
  out.sigma = traj.sigma.back();
  out.sigma_rate = traj.sigma_rate.back();
  for (int i = 0; i < 3; ++i)
    out.beta[i] = -out.sigma_rate[i] / (2.0 * out.sigma[i]);
  out.t = traj.t.back();
  return out;
}

}  // namespace logbec
