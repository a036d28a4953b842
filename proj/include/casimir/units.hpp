#pragma once

#include <string>

namespace casimir::units {

// CODATA 2018 exact/recommended values and the IAU nominal solar mass
// parameter.  Everything internal to the library is expressed in geometric
// units (G = c = hbar = 1); lengths carry metres when SI conversions apply.
inline constexpr double c_m_per_s = 299792458.0;            // exact
inline constexpr double G_si = 6.67430e-11;                 // m^3 kg^-1 s^-2
inline constexpr double hbar_si = 1.054571817e-34;          // J s
inline constexpr double GM_sun_si = 1.32712440018e20;       // m^3 s^-2

// One solar mass expressed as a length, GM_sun / c^2.
inline constexpr double solar_mass_m = GM_sun_si / (c_m_per_s * c_m_per_s);

// hbar * c, converts a geometric energy density (1/m^4) to J/m^3.
inline constexpr double hbar_c_J_m = hbar_si * c_m_per_s;

enum class Kind {
    MassKg,                  // kg            <-> m            (G/c^2)
    MassSolar,               // solar masses  <-> m
    AngularVelocitySi,       // rad/s         <-> 1/m          (1/c)
    LengthM,                 // m             <-> m            (identity)
    EnergyDensityGeometric,  // 1/m^4         <-> J/m^3        (hbar c)
};

enum class Direction { ToGeometric, ToSi };

// Converts a scalar between SI and geometric units.  Throws
// errc::invalid_argument on non-finite input.
double convert(double value, Kind kind, Direction direction);

// Parses the CLI spelling of a conversion kind ("mass_kg", "mass_solar",
// "angular_velocity_si", "length_m", "energy_density_geometric").  Throws a
// usage error for anything else.
Kind parse_kind(const std::string& name);

const char* to_string(Kind kind);

}  // namespace casimir::units
