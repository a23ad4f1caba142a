#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "logbec/model.hpp"
#include "logbec/pde.hpp"
#include "logbec/run.hpp"
#include "logbec/units.hpp"

namespace logbec {

enum class Solver { variational, pde, both };

/// A fully resolved experiment: unit system, internal-unit run recipe, time
/// window, output cadence, solver selection and field-solver overrides.
/// Dimensioned config fields carry explicit unit tags; see docs/config in
/// the README for the schema.
struct ExperimentConfig {
  UnitSystem units;
  RunSpec run;
  double t_end = 0.0;           // internal
  double sample_interval = 0.0; // internal
  Solver solver = Solver::variational;
  bool compare_b0 = false;

  // field-solver overrides (0 = auto)
  int pde_points = 4096;
  double pde_r_max = 0.0;  // internal
  double pde_dt = 0.0;     // internal

  std::string source_path;

  ExperimentConfig() : units(default_unit_system()) {}
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text,
                              const std::string& origin = "<config>");

/// Comment header with the resolved config and the internal-unit
/// conversions used, '#'-prefixed, embedded in every CSV.
void write_config_header(const ExperimentConfig& cfg, std::ostream& os);

/// Fixed CSV number format: scientific, 9 significant digits.
std::string format_sci(double v);

}  // namespace logbec
