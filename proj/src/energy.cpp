#include "casimir/energy.hpp"

#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

#include <cmath>
#include <numbers>

namespace casimir {
namespace {

Regime label_from(double energy, double flat_reference) {
    if (std::abs(energy) <= null_tol * std::abs(flat_reference)) return Regime::Null;
    return energy < 0.0 ? Regime::Attractive : Regime::Repulsive;
}

}  // namespace

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Attractive: return "Attractive";
        case Regime::Repulsive: return "Repulsive";
        case Regime::Null: return "Null";
        case Regime::Forbidden: return "Forbidden";
    }
    return "?";
}

double casimir_energy_flat_massless(double proper_length, BoundaryCondition bc) {
    if (!std::isfinite(proper_length) || !(proper_length > 0.0))
        throw Error(errc::invalid_argument,
                    "casimir_energy_flat_massless: proper length must be positive");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double lp2 = proper_length * proper_length;
    const double dirichlet = -pi2 / (1440.0 * lp2 * lp2);
    // Mixed (Dirichlet-Neumann) plates reverse the sign and scale by 7/8.
    return bc == BoundaryCondition::Mixed ? -0.875 * dirichlet : dirichlet;
}

double casimir_energy_flat_massive(double mass, double proper_length,
                                   BoundaryCondition bc) {
    if (!std::isfinite(mass) || mass < 0.0)
        throw Error(errc::invalid_argument,
                    "casimir_energy_flat_massive: mass must be finite and >= 0");
    if (!std::isfinite(proper_length) || !(proper_length > 0.0))
        throw Error(errc::invalid_argument,
                    "casimir_energy_flat_massive: proper length must be positive");

    const double x = 2.0 * mass * proper_length;
    if (x < massless_crossover) return casimir_energy_flat_massless(proper_length, bc);

    const specfun::SeriesResult s =
        specfun::casimir_series(x, boundary_flag(bc), series_rel_tol);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return -mass * mass / (8.0 * pi2 * proper_length * proper_length) * s.value;
}

double orientation_prefactor(const LocalMetric& m, Orientation orientation) {
    const double r2 = m.g_tt * m.g_xx / g_tilde(m);  // in (0, 1]
    if (orientation == Orientation::X) return std::sqrt(r2);
    return (3.0 * r2 - 2.0) / (r2 * std::sqrt(r2));
}

EnergyResult casimir_energy_density(const LocalMetric& m, const CavityConfig& cavity) {
    const double lp = proper_length(m, cavity);
    const double flat = casimir_energy_flat_massive(cavity.mass, lp, cavity.bc);
    const double pref = orientation_prefactor(m, cavity.orientation);
    const double energy = pref * flat;
    return EnergyResult{energy, flat, pref, label_from(energy, flat)};
}

bool keeps_flat_sign(const LocalMetric& m, Orientation orientation) {
    if (orientation == Orientation::X) return true;
    return m.g_tx * m.g_tx < -0.5 * m.g_tt * m.g_xx;
}

bool sign_flipped(const LocalMetric& m, Orientation orientation) {
    if (orientation == Orientation::X) return false;
    return m.g_tx * m.g_tx > -0.5 * m.g_tt * m.g_xx;
}

}  // namespace casimir
