#pragma once

#include <optional>

#include "logbec/dkc.hpp"
#include "logbec/model.hpp"
#include "logbec/variational.hpp"

namespace logbec {

/// One complete width-simulation recipe: initial state, model parameters,
/// trap schedule and an optional collimation kick. All internal units.
struct RunSpec {
  BECParams params;
  GaussianState initial;
  TrapSchedule schedule;
  std::optional<KickSpec> kick;
  IntegratorSettings settings;
};

/// Runs the width equations through the schedule, resolving and applying the
/// kick when present. An unresolved kick frequency is computed from this
/// run's own state at t_kick. Thin-lens kicks appear in the trajectory as a
/// sample pair straddling the lens; finite pulses are integrated as schedule
/// segments.
WidthTrajectory run_variational(const RunSpec& spec, double t_end);

/// Same run with the kick frequency already fixed (paired-run use).
WidthTrajectory run_variational_fixed_kick(const RunSpec& spec, double t_end,
                                           std::optional<double> omega_kick);

/// Paired runs for deviation studies: the companion has b = 0 and, when the
/// kick is unresolved, the pulse is designed on the companion's state and
/// applied identically to both runs.
struct RunPair {
  WidthTrajectory reference;  // b = 0
  WidthTrajectory test;
};
RunPair run_pair(const RunSpec& spec, double t_end);

/// State at the end of a trajectory.
GaussianState final_state(const WidthTrajectory& traj);

/// State just after the kick of a run (for error budgets); requires a kick.
GaussianState post_kick_state(const RunSpec& spec);

}  // namespace logbec
