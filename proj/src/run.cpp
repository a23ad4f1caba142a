#include "logbec/run.hpp"

#include <cmath>
#include <stdexcept>

#include "logbec/errors.hpp"

namespace logbec {

namespace {

void append(WidthTrajectory& into, const WidthTrajectory& tail, bool skip_first) {
  const std::size_t start = skip_first ? 1 : 0;
  for (std::size_t i = start; i < tail.size(); ++i) {
    into.t.push_back(tail.t[i]);
    into.sigma.push_back(tail.sigma[i]);
    into.sigma_rate.push_back(tail.sigma_rate[i]);
    into.energy.push_back(tail.energy[i]);
  }
}

}  // namespace

GaussianState final_state(const WidthTrajectory& traj) {
  if (traj.size() == 0) throw std::domain_error("final_state: empty trajectory");
  GaussianState s;
  s.sigma = traj.sigma.back();
  s.sigma_rate = traj.sigma_rate.back();
  for (int i = 0; i < 3; ++i) s.beta[i] = -s.sigma_rate[i] / (2.0 * s.sigma[i]);
  s.t = traj.t.back();
  return s;
}

WidthTrajectory run_variational_fixed_kick(const RunSpec& spec, double t_end,
                                           std::optional<double> omega_kick) {
  if (!spec.kick.has_value())
    return integrate(spec.initial, spec.params, spec.schedule, t_end,
                     spec.settings);

  const KickSpec& kick = *spec.kick;
  kick.validate();
  if (!(kick.t_kick > spec.initial.t) || !(kick.t_kick < t_end))
    throw ConfigError("run: kick time must lie inside the simulated window");

  // Leg 1: up to the kick.
  WidthTrajectory traj = integrate(spec.initial, spec.params, spec.schedule,
                                   kick.t_kick, spec.settings);
  GaussianState at_kick = final_state(traj);
  const double omega =
      omega_kick ? *omega_kick
                 : collimation_frequency(at_kick, kick.duration);

  GaussianState after;
  if (kick.mode == KickMode::thin_lens) {
    after = apply_thin_lens(at_kick, omega, kick.duration);
    traj.t.push_back(after.t);
    traj.sigma.push_back(after.sigma);
    traj.sigma_rate.push_back(after.sigma_rate);
    traj.energy.push_back(energy_per_particle(after, spec.params,
                                              spec.schedule.omega_at(after.t)));
  } else {
    TrapSchedule pulse = spec.schedule.with_segment(
        {kick.t_kick, kick.t_kick + kick.duration, {omega, omega, omega}});
    const WidthTrajectory leg = integrate(at_kick, spec.params, pulse,
                                          kick.t_kick + kick.duration,
                                          spec.settings);
    append(traj, leg, /*skip_first=*/true);
    after = final_state(leg);
  }

  // Leg 2: remainder of the window.
  const WidthTrajectory leg =
      integrate(after, spec.params, spec.schedule, t_end, spec.settings);
  append(traj, leg, /*skip_first=*/true);
  return traj;
}

WidthTrajectory run_variational(const RunSpec& spec, double t_end) {
  return run_variational_fixed_kick(spec, t_end,
                                    spec.kick ? spec.kick->omega : std::nullopt);
}

RunPair run_pair(const RunSpec& spec, double t_end) {
  RunSpec ref = spec;
  ref.params.log_strength = 0.0;

  std::optional<double> shared_omega;
  if (spec.kick.has_value()) {
    shared_omega = spec.kick->omega;
    if (!shared_omega) {
      // Design the lens on the b = 0 companion; one physical pulse.
      const WidthTrajectory lead = integrate(ref.initial, ref.params,
                                             ref.schedule, spec.kick->t_kick,
                                             ref.settings);
      shared_omega =
          collimation_frequency(final_state(lead), spec.kick->duration);
    }
  }

  RunPair pair;
  pair.reference = run_variational_fixed_kick(ref, t_end, shared_omega);
  pair.test = run_variational_fixed_kick(spec, t_end, shared_omega);
  return pair;
}

GaussianState post_kick_state(const RunSpec& spec) {
  if (!spec.kick.has_value())
    throw std::domain_error("post_kick_state: run has no kick");
  const KickSpec& kick = *spec.kick;
  const WidthTrajectory lead = integrate(spec.initial, spec.params,
                                         spec.schedule, kick.t_kick,
                                         spec.settings);
  const GaussianState at_kick = final_state(lead);
  const double omega = kick.omega ? *kick.omega
                                  : collimation_frequency(at_kick, kick.duration);
  if (kick.mode == KickMode::thin_lens)
    return apply_thin_lens(at_kick, omega, kick.duration);
  return apply_finite_pulse(at_kick, omega, kick.duration, spec.params,
                            spec.settings);
}

}  // namespace logbec
