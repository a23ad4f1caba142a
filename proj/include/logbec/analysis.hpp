#pragma once

#include <iosfwd>
#include <vector>

#include "logbec/model.hpp"
#include "logbec/run.hpp"
#include "logbec/units.hpp"

namespace logbec {

/// Relative (dimensionless) uncertainties of the preparation parameters.
struct RelativeErrors {
  double atom_number = 0.0;    // delta_N
  double scatter_length = 0.0; // delta_a
  double width0 = 0.0;         // delta_sigma(0)
  double rate0 = 0.0;          // delta_sigma_rate(0)

  void validate() const;
};

/// Far-field expansion rate of the b = 0 linear regime and its components:
/// total^2 = residual^2 + heisenberg^2 + interaction^2 with
///   residual    = sigma_rate(0)
///   heisenberg  = 1/(2 sigma(0))
///   interaction = sqrt(N a / (6 sqrt(pi) sigma(0)^3))
struct FarfieldRate {
  double total = 0.0;
  double residual = 0.0;
  double heisenberg = 0.0;
  double interaction = 0.0;
};
FarfieldRate farfield_rate(const GaussianState& state0, const BECParams& params);

struct RateError {
  double relative = 0.0;  // delta_sigma_rate
  double absolute = 0.0;  // delta * total far-field rate, internal velocity
};

/// First-order error propagation of the far-field rate through the relative
/// uncertainties of N, a, sigma(0) and sigma_rate(0). Exactly symmetric
/// under exchanging the N and a errors.
RateError rate_error(const GaussianState& state0, const BECParams& params,
                     const RelativeErrors& errs);

/// Largest parasitic harmonic frequency distinguishable from the log term:
/// b / hbar (internal angular frequency). Requires b > 0.
double magnetic_threshold(const BECParams& params);

/// Initial width that produces the requested energy ratio chi for the given
/// parameters at sigma_rate(0) = 0, found by bisection on [0.01, 1000]
/// internal lengths (chi is strictly decreasing in the width).
double solve_sigma0_for_chi(double chi_target, const BECParams& params);

enum class SweepAxis { chi, log_strength };

/// Width-difference matrix sigma(t; b=0) - sigma(t; b) over a time grid and
/// a sweep axis (chi via the initial width, or b directly).
struct DifferenceMap {
  SweepAxis axis = SweepAxis::chi;
  std::vector<double> times;        // internal
  std::vector<double> sweep_values; // chi values or internal b values
  std::vector<std::vector<double>> delta;  // [time][sweep], internal length

  double at(std::size_t time_idx, std::size_t sweep_idx) const {
    return delta[time_idx][sweep_idx];
  }
};

/// Runs paired simulations per sweep value. chi sweeps keep the base
/// parameters and rate and solve the initial width from chi; b sweeps
/// replace the test run's log strength. Cells are evaluated concurrently;
/// assembly is deterministic.
DifferenceMap difference_map(const RunSpec& base, SweepAxis axis,
                             const std::vector<double>& values,
                             const std::vector<double>& t_grid);

/// CSV serialization: header row of sweep values, first column time [s],
/// cells in meters, scientific notation with 9 significant digits.
void write_csv(const DifferenceMap& map, const UnitSystem& units,
               std::ostream& os);

}  // namespace logbec
