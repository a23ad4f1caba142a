#include "logbec/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "logbec/errors.hpp"

namespace logbec {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double contact_coeff(const BECParams& p) {
  return p.atom_number * p.scatter_length / (4.0 * kSqrtPi);
}

void require_positive_widths(const std::array<double, 3>& sigma,
                             const char* where) {
  for (int i = 0; i < 3; ++i) {
    if (!(sigma[i] > 0.0)) {
      std::ostringstream os;
      os << where << ": width on axis " << axis_name(i)
         << " must be > 0, got " << sigma[i];
      throw std::domain_error(os.str());
    }
  }
}

void require_spherical(const GaussianState& s, const char* where) {
  if (!s.is_spherical())
    throw std::domain_error(std::string(where) +
                            ": requires a spherically symmetric state");
}

}  // namespace

std::array<double, 3> rhs_anisotropic(const GaussianState& state,
                                      const BECParams& params,
                                      const std::array<double, 3>& omega) {
  require_positive_widths(state.sigma, "rhs_anisotropic");
  const double c = contact_coeff(params);
  const double b = params.log_strength;
  const auto& s = state.sigma;
  std::array<double, 3> acc{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    acc[i] = 0.25 / (s[i] * s[i] * s[i]) - omega[i] * omega[i] * s[i] +
             c / (s[i] * s[i] * s[j] * s[k]) - b / s[i];
  }
  return acc;
}

double rhs_spherical(double sigma, const BECParams& params, double omega) {
  if (!(sigma > 0.0))
    throw std::domain_error("rhs_spherical: width must be > 0, got " +
                            std::to_string(sigma));
  const double c = contact_coeff(params);
  return 0.25 / (sigma * sigma * sigma) - omega * omega * sigma +
         c / (sigma * sigma * sigma * sigma) - params.log_strength / sigma;
}

double energy_per_particle(const GaussianState& state, const BECParams& params,
                           const std::array<double, 3>& omega) {
  require_positive_widths(state.sigma, "energy_per_particle");
  const auto& s = state.sigma;
  const auto& v = state.sigma_rate;
  double e = 0.0;
  for (int i = 0; i < 3; ++i) {
    e += 0.5 * v[i] * v[i] + 1.0 / (8.0 * s[i] * s[i]) +
         0.5 * omega[i] * omega[i] * s[i] * s[i];
  }
  const double vol = s[0] * s[1] * s[2];
  e += contact_coeff(params) / vol + params.log_strength * std::log(vol);
  return e;
}

double chi(const GaussianState& state0, const BECParams& params) {
  if (params.log_strength == 0.0)
    throw std::domain_error("chi: undefined for b = 0");
  require_spherical(state0, "chi");
  const double s = state0.sigma[0];
  if (!(s > 0.0)) throw std::domain_error("chi: width must be > 0");
  const double v = state0.sigma_rate[0];
  const double e = 1.5 * v * v + 3.0 / (8.0 * s * s) +
                   params.atom_number * params.scatter_length /
                       (4.0 * kSqrtPi * s * s * s);
  return e / (3.0 * params.log_strength);
}

double sigma_max(const GaussianState& state0, const BECParams& params) {
  if (!(params.log_strength > 0.0))
    throw std::domain_error("sigma_max: no confinement bound for b <= 0");
  return state0.sigma[0] * std::exp(chi(state0, params));
}

double gausson_width(const BECParams& params) {
  if (!(params.log_strength > 0.0))
    throw std::domain_error("gausson_width: requires b > 0");
  return 1.0 / (2.0 * std::sqrt(params.log_strength));
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with step control, exact landing on target times.

namespace {

using State6 = std::array<double, 6>;  // sx, sy, sz, vx, vy, vz

struct Deriv {
  const BECParams* params;
  std::array<double, 3> omega;

  // Returns false when a trial state has left the valid width domain, so the
  // caller rejects the step instead of evaluating a singular rhs.
  bool operator()(const State6& y, State6& dydt) const {
    for (int i = 0; i < 3; ++i)
      if (!(y[i] > kWidthFloor * 0.5)) return false;
    const double c = contact_coeff(*params);
    const double b = params->log_strength;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      dydt[i] = y[3 + i];
      dydt[3 + i] = 0.25 / (y[i] * y[i] * y[i]) -
                    omega[i] * omega[i] * y[i] +
                    c / (y[i] * y[i] * y[j] * y[k]) - b / y[i];
    }
    return true;
  }
};

// Butcher tableau, Dormand & Prince RK5(4)7M.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0,
                 kB4 = 125.0 / 192.0, kB5 = -2187.0 / 6784.0,
                 kB6 = 11.0 / 84.0;
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

class Dopri5 {
 public:
  Dopri5(const Deriv& f, const IntegratorSettings& settings)
      : f_(f), rtol_(settings.rel_tol), atol_(settings.abs_tol),
        max_step_(settings.max_step) {}

  /// Advances (t, y) to exactly t_target, adapting internal steps. Step size
  /// is carried across calls so chained sample targets keep the controller
  /// memory.
  void advance_to(double& t, State6& y, double t_target) {
    if (!(t_target > t)) return;
    if (!have_f0_) {
      if (!f_(y, f0_))
        throw std::domain_error("integrate: invalid state at segment start");
      have_f0_ = true;
      h_ = initial_step(t, y, t_target);
    }
    while (t < t_target) {
      const double h = std::min(h_, t_target - t);
      const bool last = (h >= t_target - t);
      double err = try_step(t, y, h);
      if (err <= 1.0) {
        t = last ? t_target : t + h;
        y = y_new_;
        f0_ = f_new_;  // FSAL
        check_collapse(t, y);
        h_ = h * step_factor(err);
      } else {
        h_ = h * step_factor(err);
        if (h_ < 1e-14 * std::max(1.0, std::abs(t)))
          throw StiffnessError(
              "integrate: step size underflow at t = " + std::to_string(t));
      }
      if (max_step_ > 0.0) h_ = std::min(h_, max_step_);
    }
  }

 private:
  double initial_step(double t, const State6& y, double t_target) const {
    double d0 = 0.0, d1 = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double w = atol_ + rtol_ * std::abs(y[i]);
      d0 = std::max(d0, std::abs(y[i]) / w);
      d1 = std::max(d1, std::abs(f0_[i]) / w);
    }
    double h = (d1 > 0.0) ? 0.01 * d0 / d1 : 1e-6;
    h = std::min({h, t_target - t, max_step_ > 0.0
                                       ? max_step_
                                       : std::numeric_limits<double>::max()});
    return std::max(h, 1e-12);
  }

  static double step_factor(double err) {
    if (err <= 0.0) return 5.0;
    return std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
  }

  // Returns the scaled error norm, or +inf when a stage left the domain.
  double try_step(double t, const State6& y, double h) {
    (void)t;  // autonomous system
    static constexpr double inf = std::numeric_limits<double>::infinity();
    State6 k2, k3, k4, k5, k6, tmp;

    for (int i = 0; i < 6; ++i) tmp[i] = y[i] + h * kA21 * f0_[i];
    if (!f_(tmp, k2)) return inf;
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA31 * f0_[i] + kA32 * k2[i]);
    if (!f_(tmp, k3)) return inf;
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA41 * f0_[i] + kA42 * k2[i] + kA43 * k3[i]);
    if (!f_(tmp, k4)) return inf;
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA51 * f0_[i] + kA52 * k2[i] + kA53 * k3[i] +
                           kA54 * k4[i]);
    if (!f_(tmp, k5)) return inf;
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA61 * f0_[i] + kA62 * k2[i] + kA63 * k3[i] +
                           kA64 * k4[i] + kA65 * k5[i]);
    if (!f_(tmp, k6)) return inf;
    for (int i = 0; i < 6; ++i)
      y_new_[i] = y[i] + h * (kB1 * f0_[i] + kB3 * k3[i] + kB4 * k4[i] +
                              kB5 * k5[i] + kB6 * k6[i]);
    if (!f_(y_new_, f_new_)) return inf;

    double err = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double e = h * (kE1 * f0_[i] + kE3 * k3[i] + kE4 * k4[i] +
                            kE5 * k5[i] + kE6 * k6[i] + kE7 * f_new_[i]);
      const double w =
          atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y_new_[i]));
      err += (e / w) * (e / w);
    }
    return std::sqrt(err / 6.0);
  }

  static void check_collapse(double t, const State6& y) {
    for (int i = 0; i < 3; ++i) {
      if (y[i] <= kWidthFloor) {
        std::ostringstream os;
        os << "integrate: width collapse on axis " << axis_name(i)
           << " at t = " << t << " (sigma = " << y[i] << " internal)";
        throw SimulationError(os.str());
      }
    }
  }

  Deriv f_;
  double rtol_, atol_, max_step_;
  double h_ = 0.0;
  State6 f0_{}, y_new_{}, f_new_{};
  bool have_f0_ = false;
};

GaussianState to_state(const State6& y, double t) {
  GaussianState s;
  s.sigma = {y[0], y[1], y[2]};
  s.sigma_rate = {y[3], y[4], y[5]};
  for (int i = 0; i < 3; ++i) s.beta[i] = -y[3 + i] / (2.0 * y[i]);
  s.t = t;
  return s;
}

}  // namespace

WidthTrajectory integrate(const GaussianState& state0, const BECParams& params,
                          const TrapSchedule& schedule, double t_end,
                          const IntegratorSettings& settings) {
  require_positive_widths(state0.sigma, "integrate");
  if (!(t_end > state0.t))
    throw std::domain_error("integrate: t_end must exceed the initial time");
  if (!(settings.rel_tol > 0.0) || !(settings.abs_tol > 0.0))
    throw ConfigError("integrate: tolerances must be > 0");

  const double t0 = state0.t;
  const double interval = settings.sample_interval > 0.0
                              ? settings.sample_interval
                              : (t_end - t0) / 1000.0;

  // Target times: sample instants, segment boundaries and t_end. Steps never
  // straddle a schedule discontinuity.
  std::vector<double> targets;
  for (long k = 1; t0 + k * interval < t_end - 1e-12 * (t_end - t0); ++k)
    targets.push_back(t0 + k * interval);
  for (double b : schedule.boundaries_between(t0, t_end)) targets.push_back(b);
  targets.push_back(t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end(),
                            [&](double a, double b) {
                              return std::abs(a - b) < 1e-15 * (t_end - t0);
                            }),
                targets.end());

  WidthTrajectory traj;
  traj.params = params;
  traj.schedule = schedule;
  traj.rel_tol = settings.rel_tol;
  traj.abs_tol = settings.abs_tol;

  auto record = [&](double t, const State6& y) {
    traj.t.push_back(t);
    traj.sigma.push_back({y[0], y[1], y[2]});
    traj.sigma_rate.push_back({y[3], y[4], y[5]});
    traj.energy.push_back(
        energy_per_particle(to_state(y, t), params, schedule.omega_at(t)));
  };

  State6 y{state0.sigma[0],      state0.sigma[1],      state0.sigma[2],
           state0.sigma_rate[0], state0.sigma_rate[1], state0.sigma_rate[2]};
  double t = t0;
  record(t, y);

  Deriv deriv{&params, schedule.omega_at(t0)};
  Dopri5 stepper(deriv, settings);
  for (double target : targets) {
    // omega is constant on (t, target]; sample it inside the interval.
    const auto omega = schedule.omega_at(0.5 * (t + target));
    if (omega != deriv.omega) {
      deriv.omega = omega;
      stepper = Dopri5(deriv, settings);
    }
    stepper.advance_to(t, y, target);
    record(t, y);
  }
  return traj;
}

}  // namespace logbec
