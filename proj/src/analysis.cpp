#include "logbec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <stdexcept>

#include "logbec/errors.hpp"
#include "logbec/variational.hpp"

namespace logbec {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

void RelativeErrors::validate() const {
  for (double v : {atom_number, scatter_length, width0, rate0}) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ConfigError("relative errors must be finite and >= 0");
  }
}

FarfieldRate farfield_rate(const GaussianState& state0,
                           const BECParams& params) {
  if (!state0.is_spherical())
    throw std::domain_error("farfield_rate: requires a spherical state");
  const double s = state0.sigma[0];
  if (!(s > 0.0))
    throw std::domain_error("farfield_rate: width must be > 0");
  FarfieldRate out;
  out.residual = state0.sigma_rate[0];
  out.heisenberg = 1.0 / (2.0 * s);
  out.interaction = std::sqrt(params.atom_number * params.scatter_length /
                              (6.0 * kSqrtPi * s * s * s));
  out.total = std::sqrt(out.residual * out.residual +
                        out.heisenberg * out.heisenberg +
                        out.interaction * out.interaction);
  return out;
}

RateError rate_error(const GaussianState& state0, const BECParams& params,
                     const RelativeErrors& errs) {
  errs.validate();
  const FarfieldRate r = farfield_rate(state0, params);
  const double r2 = r.residual * r.residual;
  const double hu2 = r.heisenberg * r.heisenberg;
  const double gp2 = r.interaction * r.interaction;
  const double denom = r2 + hu2 + gp2;
  const double num = std::sqrt(
      r2 * r2 * errs.rate0 * errs.rate0 +
      (1.5 * gp2 + hu2) * (1.5 * gp2 + hu2) * errs.width0 * errs.width0 +
      0.25 * gp2 * gp2 *
          (errs.scatter_length * errs.scatter_length +
           errs.atom_number * errs.atom_number));
  RateError out;
  out.relative = num / denom;
  out.absolute = out.relative * r.total;
  return out;
}

double magnetic_threshold(const BECParams& params) {
  if (!(params.log_strength > 0.0))
    throw std::domain_error("magnetic_threshold: requires b > 0");
  return params.log_strength;  // b/hbar, internal hbar = 1
}

double solve_sigma0_for_chi(double chi_target, const BECParams& params) {
  if (!(params.log_strength > 0.0))
    throw std::domain_error("solve_sigma0_for_chi: requires b > 0");
  if (!(chi_target > 0.0))
    throw std::domain_error("solve_sigma0_for_chi: chi must be > 0");
  auto chi_at = [&](double s) {
    return chi(spherical_state(s, 0.0), params);
  };
  double lo = 0.01, hi = 1000.0;
  // chi is strictly decreasing in the width at zero rate.
  if (chi_at(lo) < chi_target || chi_at(hi) > chi_target)
    throw std::domain_error(
        "solve_sigma0_for_chi: chi not attainable for widths in [0.01, 1000]");
  while ((hi - lo) > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (chi_at(mid) > chi_target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

DifferenceMap difference_map(const RunSpec& base, SweepAxis axis,
                             const std::vector<double>& values,
                             const std::vector<double>& t_grid) {
  if (values.empty())
    throw std::domain_error("difference_map: sweep values must be non-empty");
  if (t_grid.empty())
    throw std::domain_error("difference_map: time grid must be non-empty");
  const double t_end = *std::max_element(t_grid.begin(), t_grid.end());

  auto cell = [&](double value) {
    RunSpec spec = base;
    if (axis == SweepAxis::chi) {
      if (std::abs(spec.initial.sigma_rate[0]) > 0.0)
        throw std::domain_error(
            "difference_map: chi sweep requires zero initial rate");
      const double s0 = solve_sigma0_for_chi(value, spec.params);
      spec.initial = spherical_state(s0, 0.0, spec.initial.t);
    } else {
      spec.params.log_strength = value;
    }
    const RunPair pair = run_pair(spec, t_end);
    std::vector<double> col(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      col[i] = pair.reference.sigma_near(t_grid[i])[0] -
               pair.test.sigma_near(t_grid[i])[0];
    }
    return col;
  };

  std::vector<std::future<std::vector<double>>> futures;
  futures.reserve(values.size());
  for (double v : values)
    futures.push_back(std::async(std::launch::async, cell, v));

  DifferenceMap map;
  map.axis = axis;
  map.times = t_grid;
  map.sweep_values = values;
  map.delta.assign(t_grid.size(), std::vector<double>(values.size(), 0.0));
  for (std::size_t c = 0; c < values.size(); ++c) {
    const std::vector<double> col = futures[c].get();
    for (std::size_t i = 0; i < t_grid.size(); ++i) map.delta[i][c] = col[i];
  }
  return map;
}

void write_csv(const DifferenceMap& map, const UnitSystem& units,
               std::ostream& os) {
  char buf[32];
  os << (map.axis == SweepAxis::chi ? "t_s_vs_chi" : "t_s_vs_b_internal");
  for (double v : map.sweep_values) {
    std::snprintf(buf, sizeof buf, "%.8e", v);
    os << "," << buf;
  }
  os << "\n";
  for (std::size_t i = 0; i < map.times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.8e",
                  units.from_internal(map.times[i], Dimension::time));
    os << buf;
    for (std::size_t c = 0; c < map.sweep_values.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.8e",
                    units.from_internal(map.delta[i][c], Dimension::length));
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace logbec
