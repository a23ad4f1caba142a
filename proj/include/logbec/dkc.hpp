#pragma once

#include <optional>

#include "logbec/model.hpp"
#include "logbec/variational.hpp"

namespace logbec {

enum class KickMode { thin_lens, finite_pulse };

/// A collimation pulse: brief harmonic segment at t_kick of length duration.
/// When omega is unset it is resolved from the state at the kick so that the
/// pulse nulls the width rate. duration should stay well below t_kick; the
/// thin-lens reading assumes it.
struct KickSpec {
  double t_kick = 0.0;
  double duration = 0.0;
  std::optional<double> omega;  // isotropic; anisotropic kicks out of scope
  KickMode mode = KickMode::finite_pulse;

  void validate() const;
};

/// Trap frequency whose thin-lens impulse nulls the width rate:
/// omega^2 = rate / (sigma * duration). For far-field states this reduces to
/// omega^2 * duration = 1 / t_kick. Requires a spherical state with rate > 0.
double collimation_frequency(const GaussianState& state_at_kick,
                             double duration);

/// Impulsive lens: sigma unchanged, rate reduced by omega^2 * duration *
/// sigma per axis, beta refreshed from the consistency relation, time
/// advanced by duration.
GaussianState apply_thin_lens(const GaussianState& state, double omega,
                              double duration);

/// Exact pulse: integrates the width equations with the harmonic term active
/// for the pulse duration. Converges to apply_thin_lens as duration -> 0 at
/// fixed impulse.
GaussianState apply_finite_pulse(const GaussianState& state, double omega,
                                 double duration, const BECParams& params,
                                 const IntegratorSettings& settings = {});

}  // namespace logbec
