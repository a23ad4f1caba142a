#include "logbec/pde.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "logbec/errors.hpp"

namespace logbec {
namespace pde {

namespace {

constexpr double kPi = 3.14159265358979323846;

// FFTW plan creation/destruction is not thread-safe; executions are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// DST-I workspace for the kinetic step on the reduced field u = r*Psi with
/// homogeneous Dirichlet ends. One forward+inverse round trip scales by 2*n
/// (n a power of two, so the rescaling is exact in floating point).
class SineTransform {
 public:
  explicit SineTransform(int m) : m_(m) {
    buf_ = fftw_alloc_real(static_cast<std::size_t>(m));
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_r2r_1d(m, buf_, buf_, FFTW_RODFT00, FFTW_ESTIMATE);
  }
  ~SineTransform() {
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(buf_);
  }
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  double* data() { return buf_; }
  void execute() { fftw_execute(plan_); }
  int size() const { return m_; }

 private:
  int m_;
  double* buf_;
  fftw_plan plan_;
};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double isotropic_omega(const std::array<double, 3>& omega) {
  if (omega[0] != omega[1] || omega[1] != omega[2])
    throw ConfigError(
        "radial solver: trap must be isotropic (omega_x = omega_y = omega_z)");
  return omega[0];
}

double max_effective_potential(const RadialField& field,
                               const BECParams& params, double omega,
                               double density_floor) {
  const double g = 4.0 * kPi * params.scatter_length;
  const double gn = g * params.atom_number;
  const double b = params.log_strength;
  double vmax = 0.0;
  for (std::size_t j = 0; j < field.u.size(); ++j) {
    const double r = field.grid.r(static_cast<int>(j));
    const double rho = std::norm(field.u[j]) / (r * r);
    if (rho < density_floor) continue;  // phase on negligible amplitude
    const double v = 0.5 * omega * omega * r * r + gn * rho -
                     b * std::log(std::max(rho, density_floor));
    vmax = std::max(vmax, std::abs(v));
  }
  return vmax;
}

double peak_density(const RadialField& field) {
  double peak = 0.0;
  for (std::size_t j = 0; j < field.u.size(); ++j) {
    const double r = field.grid.r(static_cast<int>(j));
    peak = std::max(peak, std::norm(field.u[j]) / (r * r));
  }
  return peak;
}

}  // namespace

RadialGrid::RadialGrid(double r_max_, int n_) : r_max(r_max_), n(n_) {
  if (!(r_max > 0.0))
    throw ConfigError("radial grid: r_max must be > 0");
  if (n < 256 || !is_power_of_two(n))
    throw ConfigError("radial grid: point count must be a power of two >= 256");
}

double RadialField::norm() const {
  double s = 0.0;
  for (const auto& v : u) s += std::norm(v);
  return 4.0 * kPi * s * grid.spacing();
}

RadialField init_gaussian(const RadialGrid& grid, double sigma0,
                          double sigma_rate0) {
  if (!(sigma0 > 0.0))
    throw ConfigError("init_gaussian: width must be > 0");
  if (grid.spacing() > sigma0 / 8.0)
    throw ConfigError("init_gaussian: grid too coarse, need h <= sigma0/8");
  if (grid.r_max < 8.0 * sigma0)
    throw ConfigError("init_gaussian: grid too small, need r_max >= 8*sigma0");

  RadialField f;
  f.grid = grid;
  f.u.resize(static_cast<std::size_t>(grid.n - 1));
  // |Psi|^2 = (2 pi sigma^2)^(-3/2) exp(-r^2 / (2 sigma^2)); the quadratic
  // phase phi*r^2 with phi = sigma_rate/(2 sigma) makes d(width)/dt equal
  // sigma_rate0 under the field evolution.
  const double phi = sigma_rate0 / (2.0 * sigma0);
  for (int j = 0; j < grid.n - 1; ++j) {
    const double r = grid.r(j);
    const double amp = std::exp(-r * r / (4.0 * sigma0 * sigma0));
    f.u[static_cast<std::size_t>(j)] =
        r * amp * std::exp(std::complex<double>(0.0, phi * r * r));
  }
  const double nrm = f.norm();
  const double scale = 1.0 / std::sqrt(nrm);
  for (auto& v : f.u) v *= scale;
  return f;
}

double width(const RadialField& field) {
  double s0 = 0.0, s2 = 0.0;
  for (std::size_t j = 0; j < field.u.size(); ++j) {
    const double r = field.grid.r(static_cast<int>(j));
    const double w = std::norm(field.u[j]);
    s0 += w;
    s2 += w * r * r;
  }
  if (!(s0 > 0.0)) throw std::domain_error("width: empty field");
  return std::sqrt(s2 / (3.0 * s0));
}

double default_time_step(const RadialField& field, const BECParams& params,
                         const TrapSchedule& schedule) {
  const double floor = peak_density(field) * 1e-12;
  double omega = schedule.max_abs_omega();
  const double vmax = max_effective_potential(field, params, omega, floor);
  return 0.05 / std::max(vmax, 1e-12);
}

EvolveResult evolve(const RadialField& initial, const BECParams& params,
                    const TrapSchedule& schedule, double t_end,
                    const EvolveSettings& settings) {
  const double t0 = initial.t;
  if (!(t_end > t0))
    throw ConfigError("evolve: t_end must exceed the field time");
  if (std::abs(initial.norm() - 1.0) > 1e-6)
    throw ConfigError("evolve: field is not unit-normalized");

  const double density_floor =
      peak_density(initial) * settings.density_floor_factor;
  double dt = settings.dt > 0.0 ? settings.dt
                                : default_time_step(initial, params, schedule);
  {
    const double vmax = max_effective_potential(
        initial, params, schedule.max_abs_omega(), density_floor);
    if (dt * vmax >= 0.1)
      throw ConfigError(
          "evolve: dt does not resolve the fastest phase (dt*max|V| = " +
          std::to_string(dt * vmax) + ", need < 0.1)");
  }

  const double interval = settings.sample_interval > 0.0
                              ? settings.sample_interval
                              : (t_end - t0) / 200.0;

  // Event times: sample instants, schedule boundaries, t_end. Each interval
  // is covered by uniform steps that land exactly on the event.
  std::vector<double> events;
  for (long k = 1; t0 + k * interval < t_end - 1e-12 * (t_end - t0); ++k)
    events.push_back(t0 + k * interval);
  for (double b : schedule.boundaries_between(t0, t_end)) events.push_back(b);
  events.push_back(t_end);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [&](double a, double b) {
                             return std::abs(a - b) < 1e-15 * (t_end - t0);
                           }),
               events.end());

  RadialField field = initial;
  const int m = field.grid.n - 1;
  SineTransform dst(m);
  const double dst_scale = 1.0 / (2.0 * field.grid.n);

  // Kinetic phases are recomputed per interval only when the local step
  // changes; mode wavenumbers are fixed by the grid.
  std::vector<double> kin_phase(static_cast<std::size_t>(m));
  double kin_dt = -1.0;
  auto set_kinetic = [&](double step) {
    if (step == kin_dt) return;
    kin_dt = step;
    for (int l = 0; l < m; ++l) {
      const double kappa = (l + 1) * kPi / field.grid.r_max;
      kin_phase[static_cast<std::size_t>(l)] = -0.5 * kappa * kappa * step;
    }
  };

  const double g = 4.0 * kPi * params.scatter_length;
  const double gn = g * params.atom_number;
  const double b = params.log_strength;

  std::vector<double> re(static_cast<std::size_t>(m)),
      im(static_cast<std::size_t>(m));

  auto half_potential = [&](double step, double omega) {
    const double w2 = omega * omega;
    for (int j = 0; j < m; ++j) {
      const double r = field.grid.r(j);
      auto& uj = field.u[static_cast<std::size_t>(j)];
      const double rho = std::norm(uj) / (r * r);
      const double v = 0.5 * w2 * r * r + gn * rho -
                       b * std::log(std::max(rho, density_floor));
      uj *= std::exp(std::complex<double>(0.0, -0.5 * v * step));
    }
  };

  auto kinetic_full = [&](double step) {
    set_kinetic(step);
    for (int j = 0; j < m; ++j) {
      re[static_cast<std::size_t>(j)] = field.u[static_cast<std::size_t>(j)].real();
      im[static_cast<std::size_t>(j)] = field.u[static_cast<std::size_t>(j)].imag();
    }
    auto transform = [&](std::vector<double>& comp) {
      std::copy(comp.begin(), comp.end(), dst.data());
      dst.execute();
      std::copy(dst.data(), dst.data() + m, comp.begin());
    };
    transform(re);
    transform(im);
    for (int l = 0; l < m; ++l) {
      const double th = kin_phase[static_cast<std::size_t>(l)];
      const double c = std::cos(th), s = std::sin(th);
      const double xr = re[static_cast<std::size_t>(l)];
      const double xi = im[static_cast<std::size_t>(l)];
      re[static_cast<std::size_t>(l)] = c * xr - s * xi;
      im[static_cast<std::size_t>(l)] = s * xr + c * xi;
    }
    transform(re);
    transform(im);
    for (int j = 0; j < m; ++j)
      field.u[static_cast<std::size_t>(j)] = std::complex<double>(
          re[static_cast<std::size_t>(j)] * dst_scale,
          im[static_cast<std::size_t>(j)] * dst_scale);
  };

  EvolveResult out;
  auto record = [&](double t) {
    out.samples.push_back({t, width(field), field.norm()});
    if (std::abs(out.samples.back().norm - 1.0) > 1e-4)
      throw NumericalQualityError(
          "evolve: norm drift exceeds 1e-4 at t = " + std::to_string(t));
  };
  record(t0);

  double t = t0;
  for (double ev : events) {
    const double span = ev - t;
    const long steps = std::max(1L, static_cast<long>(std::ceil(span / dt)));
    const double step = span / static_cast<double>(steps);
    const double omega = isotropic_omega(schedule.omega_at(0.5 * (t + ev)));
    for (long k = 0; k < steps; ++k) {
      half_potential(step, omega);
      kinetic_full(step);
      half_potential(step, omega);
    }
    t = ev;
    field.t = t;
    record(t);
  }
  out.final_field = std::move(field);
  return out;
}

void dump_field(const RadialField& field, std::ostream& os) {
  os << "# radial field snapshot\n";
  os << "# t " << field.t << "\n";
  os << "# n " << field.grid.n << " r_max " << field.grid.r_max << "\n";
  char line[96];
  for (std::size_t j = 0; j < field.u.size(); ++j) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g\n",
                  field.grid.r(static_cast<int>(j)), field.u[j].real(),
                  field.u[j].imag());
    os << line;
  }
}

}  // namespace pde
}  // namespace logbec
