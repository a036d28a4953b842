#include "casimir/units.hpp"

#include "casimir/error.hpp"

#include <cmath>

namespace casimir::units {

double convert(double value, Kind kind, Direction direction) {
    if (!std::isfinite(value))
        throw Error(errc::invalid_argument, "convert: value must be finite");

    const bool to_geo = direction == Direction::ToGeometric;
    switch (kind) {
        case Kind::MassKg: {
            const double f = G_si / (c_m_per_s * c_m_per_s);
            return to_geo ? value * f : value / f;
        }
        case Kind::MassSolar:
            return to_geo ? value * solar_mass_m : value / solar_mass_m;
        case Kind::AngularVelocitySi:
            return to_geo ? value / c_m_per_s : value * c_m_per_s;
        case Kind::LengthM:
            return value;
        case Kind::EnergyDensityGeometric:
            return to_geo ? value / hbar_c_J_m : value * hbar_c_J_m;
    }
    throw Error(errc::invalid_argument, "convert: unknown kind");
}

Kind parse_kind(const std::string& name) {
    if (name == "mass_kg") return Kind::MassKg;
    if (name == "mass_solar") return Kind::MassSolar;
    if (name == "angular_velocity_si") return Kind::AngularVelocitySi;
    if (name == "length_m") return Kind::LengthM;
    if (name == "energy_density_geometric") return Kind::EnergyDensityGeometric;
    throw Error(errc::usage, "unknown unit kind '" + name + "'");
}

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::MassKg: return "mass_kg";
        case Kind::MassSolar: return "mass_solar";
        case Kind::AngularVelocitySi: return "angular_velocity_si";
        case Kind::LengthM: return "length_m";
        case Kind::EnergyDensityGeometric: return "energy_density_geometric";
    }
    return "?";
}

}  // namespace casimir::units
