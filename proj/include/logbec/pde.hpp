#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "logbec/model.hpp"

namespace logbec {
namespace pde {

/// Uniform radial grid on [0, r_max] with Dirichlet ends. n must be a power
/// of two and at least 256.
struct RadialGrid {
  double r_max = 0.0;
  int n = 4096;

  RadialGrid() = default;
  RadialGrid(double r_max, int n);
  double spacing() const { return r_max / n; }
  double r(int j) const { return (j + 1) * spacing(); }  // interior index j
};

/// Reduced radial wavefunction u_j = r_j * Psi(r_j) at the n-1 interior
/// points; u(0) = u(r_max) = 0. Unit norm convention 4*pi*sum|u|^2*h = 1.
struct RadialField {
  RadialGrid grid;
  std::vector<std::complex<double>> u;
  double t = 0.0;

  double norm() const;
};

/// Gaussian density of width sigma0 with the quadratic phase that gives the
/// field an initial width rate sigma_rate0. Requires h <= sigma0/8 and
/// r_max >= 8*sigma0.
RadialField init_gaussian(const RadialGrid& grid, double sigma0,
                          double sigma_rate0);

/// rms width sqrt(<r^2>/3); equals the per-axis Gaussian sigma on Gaussian
/// profiles.
double width(const RadialField& field);

struct EvolveSettings {
  double dt = 0.0;               // 0: resolved from the phase bound
  double sample_interval = 0.0;  // 0: (t_end - t0)/200
  double density_floor_factor = 1e-12;  // relative to peak initial density
};

struct FieldSample {
  double t = 0.0;
  double width = 0.0;
  double norm = 0.0;
};

struct EvolveResult {
  std::vector<FieldSample> samples;
  RadialField final_field;
};

/// Largest dt satisfying dt*max|V_eff|/hbar = 0.05 on the given field, with
/// the trap term taken at the schedule's strongest segment.
double default_time_step(const RadialField& field, const BECParams& params,
                         const TrapSchedule& schedule);

/// Strang-split evolution of the logarithmic field equation: half-step
/// nonlinear+trap phase with V = -b*ln(max(|Psi|^2, eps)) + g*N*|Psi|^2,
/// g = 4*pi*a (internal), exact kinetic step in the sine basis, second phase
/// half-step. Steps never straddle schedule boundaries. Norm is not
/// renormalized; drift beyond 1e-4 raises NumericalQualityError.
EvolveResult evolve(const RadialField& initial, const BECParams& params,
                    const TrapSchedule& schedule, double t_end,
                    const EvolveSettings& settings = {});

/// Debug snapshot: header lines with parameters, then one line per grid
/// point `r value_re value_im`.
void dump_field(const RadialField& field, std::ostream& os);

}  // namespace pde
}  // namespace logbec
