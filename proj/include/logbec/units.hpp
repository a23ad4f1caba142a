#pragma once

#include <string>

namespace logbec {

// Pinned physical constants (SI). Values are fixed so that outputs are
// bit-reproducible across builds.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double bohr_radius = 5.29177211e-11;   // m
inline constexpr double electron_volt = 1.602176634e-19;  // J
inline constexpr double rb87_mass = 1.44316060e-25;     // kg
}  // namespace constants

enum class Dimension { length, time, energy, frequency, velocity };

std::string dimension_name(Dimension d);

/// Scaling between laboratory (SI) units and internal units with hbar = m = 1
/// and the length unit equal to reference_length. Immutable after
/// construction; safe to share across threads.
class UnitSystem {
 public:
  UnitSystem(double reference_length_m, double species_mass_kg);

  double reference_length() const { return reference_length_; }  // m
  double species_mass() const { return species_mass_; }          // kg
  double time_unit() const { return time_unit_; }                // s
  double energy_unit() const { return energy_unit_; }            // J

  double to_internal(double value, Dimension d) const;
  double from_internal(double value, Dimension d) const;

 private:
  double reference_length_;
  double species_mass_;
  double time_unit_;
  double energy_unit_;
};

UnitSystem make_unit_system(double reference_length_m, double species_mass_kg);

/// Default scaling for this artifact: 1 um reference length, Rb-87 mass.
/// Keeps widths, times and log strengths near unity for the regimes studied.
UnitSystem default_unit_system();

}  // namespace logbec
