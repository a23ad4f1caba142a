#pragma once

#include <stdexcept>
#include <string>

namespace logbec {

/// Invalid configuration or precondition on inputs (bad units, grids, tolerances).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Physics failure during a run (collapse, stiffness, lost numerical quality).
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Step-size underflow: the integrator cannot resolve the dynamics.
class StiffnessError : public SimulationError {
 public:
  explicit StiffnessError(const std::string& what) : SimulationError(what) {}
};

/// A numerical-quality diagnostic tripped (e.g. norm drift in the field solver).
class NumericalQualityError : public SimulationError {
 public:
  explicit NumericalQualityError(const std::string& what) : SimulationError(what) {}
};

}  // namespace logbec
