#pragma once

#include "casimir/backgrounds.hpp"
#include "casimir/energy.hpp"

#include <optional>

namespace casimir {

// All distinguished velocities of one background at fixed radius.  The
// nesting bounds.lower < zero_energy.lower < drag < zero_energy.upper <
// bounds.upper always holds; the optional members are the extra landmarks a
// particular background possesses.
struct CriticalSet {
    double drag;                // v_d or omega_d
    VelocityBounds bounds;      // edge of the timelike interval
    VelocityBounds zero_energy; // y-orientation energy crosses zero here
    // Cylinder only: |energy| returns to the flat magnitude with flipped sign.
    std::optional<VelocityBounds> unit_flip;
    // Kerr only: geodesic (free-fall) circular orbits, prograde/retrograde.
    std::optional<VelocityBounds> geodesic;
};

// Critical velocities of the cylinder ring at (k, r):
//   bounds       v_d -+ sqrt(v_d^2+1)
//   zero_energy  v_d -+ sqrt((v_d^2+1)/3)
//   unit_flip    v_d -+ sqrt((2 sqrt(3)-3)(v_d^2+1))
double cylinder_zero_offset(double k, double r);
CriticalSet cylinder_critical_set(double k, double r);

// Critical angular velocities of the Kerr equatorial orbit at (M, a, r):
//   bounds       omega_d -+ r^2 sqrt(Delta)/A
//   zero_energy  omega_d -+ r^2 sqrt(Delta/3)/A
//   geodesic     +-sqrt(M)/(r^{3/2} +- a sqrt(M))
CriticalSet kerr_critical_set(double M, double a, double r);
VelocityBounds kerr_geodesic_angular_velocities(double M, double a, double r);

// Closed-form energy densities, evaluated without building the local metric
// (independent algebra from the generic pipeline; they share only the flat
// reference).  The cavity's orientation field is ignored - the function name
// fixes it.
double cylinder_energy_x(double k, double r, double v, const CavityConfig& cavity);
double cylinder_energy_y(double k, double r, double v, const CavityConfig& cavity);
double kerr_energy_x(const KerrParams& p, const CavityConfig& cavity);
double kerr_energy_y(const KerrParams& p, const CavityConfig& cavity);

// Ratio of the y- and x-orientation energies, each normalised by its own
// flat reference (the two orientations have different proper lengths):
// 1 - g(1 + 2g) with g = -g_tx^2/(g_tt g_xx) = (3 R^2 - 2)/R^4.  Equals 1 at
// omega = omega_d and 0 at the zero-energy angular velocities.
double kerr_energy_ratio(double M, double a, double r, double omega);

// Weak-field expansion parameter x = 1 - R; for small x the normalised
// y-energy is 1 - 3x + O(x^2).
double kerr_weak_field_x(double M, double a, double r, double omega);

// Non-throwing regime classification.  Out-of-patch or non-timelike points
// return Forbidden; otherwise the label matches the sign of the energy
// density with the null_tol band.  Independent of field mass and plate
// separation (the prefactor carries the whole sign).
Regime classify_cylinder(double k, double r, double v, Orientation orientation,
                         BoundaryCondition bc);
Regime classify_kerr(double M, double a, double r, double omega,
                     Orientation orientation, BoundaryCondition bc);

}  // namespace casimir
