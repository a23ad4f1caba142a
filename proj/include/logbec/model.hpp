#pragma once

#include <array>
#include <string>
#include <vector>

namespace logbec {

// All quantities below are in internal units (hbar = m = 1) unless a field
// name says otherwise.

/// Species and interaction constants of the condensate model.
struct BECParams {
  double atom_number = 0.0;    // N, dimensionless count
  double scatter_length = 0.0; // s-wave scatter length a
  double log_strength = 0.0;   // b, energy of the logarithmic nonlinearity
  static constexpr double mass = 1.0;

  // species metadata, reporting only
  std::string species_name = "Rb87";
  double species_mass_kg = 0.0;
};

/// Widths, width rates and phase parameters of the Gaussian ansatz at one
/// instant. alpha (mean-velocity phase) is carried but always zero here;
/// beta obeys m*sigma_rate = -2*hbar*beta*sigma whenever populated.
struct GaussianState {
  std::array<double, 3> sigma{1.0, 1.0, 1.0};
  std::array<double, 3> sigma_rate{0.0, 0.0, 0.0};
  std::array<double, 3> alpha{0.0, 0.0, 0.0};
  std::array<double, 3> beta{0.0, 0.0, 0.0};
  double t = 0.0;

  bool is_spherical(double rel_tol = 1e-12) const;
};

/// Isotropic state with beta derived from the rate via the consistency
/// relation and alpha = 0. Throws std::domain_error for sigma <= 0.
GaussianState spherical_state(double sigma, double sigma_rate, double t = 0.0);

constexpr const char* axis_name(int axis) {
  return axis == 0 ? "x" : (axis == 1 ? "y" : "z");
}

/// One piecewise-constant trap interval. omega may be zero (free flight).
struct TrapSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  std::array<double, 3> omega{0.0, 0.0, 0.0};
};

/// Ordered, non-overlapping trap segments; gaps are implicit free flight.
class TrapSchedule {
 public:
  TrapSchedule() = default;
  explicit TrapSchedule(std::vector<TrapSegment> segments);

  const std::vector<TrapSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  /// Trap frequency at time t; zero outside any segment. Segment intervals
  /// are closed-open [t_start, t_end).
  std::array<double, 3> omega_at(double t) const;

  /// Segment boundary instants strictly inside (t0, t1), sorted.
  std::vector<double> boundaries_between(double t0, double t1) const;

  /// Largest |omega| component over all segments.
  double max_abs_omega() const;

  TrapSchedule with_segment(const TrapSegment& extra) const;

 private:
  std::vector<TrapSegment> segments_;
};

/// Sampled time series of a width simulation run.
struct WidthTrajectory {
  std::vector<double> t;
  std::vector<std::array<double, 3>> sigma;
  std::vector<std::array<double, 3>> sigma_rate;
  std::vector<double> energy;  // per particle, internal units

  // run metadata
  BECParams params;
  TrapSchedule schedule;
  double rel_tol = 0.0;
  double abs_tol = 0.0;

  std::size_t size() const { return t.size(); }
  /// Largest sampled width on the given axis.
  double max_width(int axis = 0) const;
  /// Width at sample time closest to t_query (times are strictly increasing).
  std::array<double, 3> sigma_near(double t_query) const;
};

}  // namespace logbec
