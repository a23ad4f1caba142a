#include "logbec/units.hpp"

#include "logbec/errors.hpp"

namespace logbec {

std::string dimension_name(Dimension d) {
  switch (d) {
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::energy: return "energy";
    case Dimension::frequency: return "frequency";
    case Dimension::velocity: return "velocity";
  }
  return "unknown";
}

UnitSystem::UnitSystem(double reference_length_m, double species_mass_kg)
    : reference_length_(reference_length_m), species_mass_(species_mass_kg) {
  if (!(reference_length_m > 0.0))
    throw ConfigError("unit system: reference length must be > 0, got " +
                      std::to_string(reference_length_m));
  if (!(species_mass_kg > 0.0))
    throw ConfigError("unit system: species mass must be > 0, got " +
                      std::to_string(species_mass_kg));
  time_unit_ = species_mass_kg * reference_length_m * reference_length_m /
               constants::hbar;
  energy_unit_ = constants::hbar / time_unit_;
}

double UnitSystem::to_internal(double value, Dimension d) const {
  switch (d) {
    case Dimension::length: return value / reference_length_;
    case Dimension::time: return value / time_unit_;
    case Dimension::energy: return value / energy_unit_;
    case Dimension::frequency: return value * time_unit_;
    case Dimension::velocity: return value * time_unit_ / reference_length_;
  }
  throw ConfigError("to_internal: unknown dimension kind");
}

double UnitSystem::from_internal(double value, Dimension d) const {
  switch (d) {
    case Dimension::length: return value * reference_length_;
    case Dimension::time: return value * time_unit_;
    case Dimension::energy: return value * energy_unit_;
    case Dimension::frequency: return value / time_unit_;
    case Dimension::velocity: return value * reference_length_ / time_unit_;
  }
  throw ConfigError("from_internal: unknown dimension kind");
}

UnitSystem make_unit_system(double reference_length_m, double species_mass_kg) {
  return UnitSystem(reference_length_m, species_mass_kg);
}

UnitSystem default_unit_system() {
  return UnitSystem(1e-6, constants::rb87_mass);
}

}  // namespace logbec
