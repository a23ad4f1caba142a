#include "logbec/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logbec/errors.hpp"

namespace logbec {

bool GaussianState::is_spherical(double rel_tol) const {
  const double smax = std::max({sigma[0], sigma[1], sigma[2]});
  const double smin = std::min({sigma[0], sigma[1], sigma[2]});
  const double vmax = std::max({sigma_rate[0], sigma_rate[1], sigma_rate[2]});
  const double vmin = std::min({sigma_rate[0], sigma_rate[1], sigma_rate[2]});
  const double vscale = std::max(std::abs(vmax), std::abs(vmin));
  return (smax - smin) <= rel_tol * smax &&
         (vmax - vmin) <= rel_tol * std::max(vscale, 1e-300);
}

GaussianState spherical_state(double sigma, double sigma_rate, double t) {
  if (!(sigma > 0.0))
    throw std::domain_error("spherical_state: width must be > 0, got " +
                            std::to_string(sigma));
  GaussianState s;
  s.sigma = {sigma, sigma, sigma};
  s.sigma_rate = {sigma_rate, sigma_rate, sigma_rate};
  s.alpha = {0.0, 0.0, 0.0};
  // m*sigma_rate = -2*hbar*beta*sigma, internal hbar = m = 1
  const double beta = -sigma_rate / (2.0 * sigma);
  s.beta = {beta, beta, beta};
  s.t = t;
  return s;
}

TrapSchedule::TrapSchedule(std::vector<TrapSegment> segments)
    : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(),
            [](const TrapSegment& a, const TrapSegment& b) {
              return a.t_start < b.t_start;
            });
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!(s.t_start < s.t_end))
      throw ConfigError("trap schedule: segment " + std::to_string(i) +
                        " has t_start >= t_end");
    if (i > 0 && s.t_start < segments_[i - 1].t_end)
      throw ConfigError("trap schedule: segment " + std::to_string(i) +
                        " overlaps the previous segment");
  }
}

std::array<double, 3> TrapSchedule::omega_at(double t) const {
  for (const auto& s : segments_) {
    if (t >= s.t_start && t < s.t_end) return s.omega;
  }
  return {0.0, 0.0, 0.0};
}

std::vector<double> TrapSchedule::boundaries_between(double t0, double t1) const {
  std::vector<double> out;
  for (const auto& s : segments_) {
    for (double b : {s.t_start, s.t_end}) {
      if (b > t0 && b < t1) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double TrapSchedule::max_abs_omega() const {
  double m = 0.0;
  for (const auto& s : segments_)
    for (double w : s.omega) m = std::max(m, std::abs(w));
  return m;
}

TrapSchedule TrapSchedule::with_segment(const TrapSegment& extra) const {
  auto segs = segments_;
  segs.push_back(extra);
  return TrapSchedule(std::move(segs));
}

double WidthTrajectory::max_width(int axis) const {
  double m = 0.0;
  for (const auto& s : sigma) m = std::max(m, s[axis]);
  return m;
}

std::array<double, 3> WidthTrajectory::sigma_near(double t_query) const {
  if (t.empty()) throw std::domain_error("sigma_near: empty trajectory");
  auto it = std::lower_bound(t.begin(), t.end(), t_query);
  std::size_t i = static_cast<std::size_t>(it - t.begin());
  if (i == t.size()) return sigma.back();
  if (i > 0 && (t_query - t[i - 1]) < (t[i] - t_query)) --i;
  return sigma[i];
}

}  // namespace logbec
