#pragma once

#include "casimir/geometry.hpp"

namespace casimir {

// Relative margin used by every open-interval admissibility check: a point
// closer than margin * (interval width) to either end is treated as outside.
inline constexpr double admissibility_margin = 1e-12;

struct VelocityBounds {
    double lower, upper;
};

// ---------------------------------------------------------------------------
// Rotating-string / linear-momentum cylinder background.
//
// Static cylindrical line element indexed by the momentum parameter k, in
// Kasner-like form; observers ride a ring of coordinate radius r with
// linear velocity v in the x (angular) direction.  The local metric is valid
// only on radii where cos(2 k ln r) > 0 (positive-cosine patch).
// ---------------------------------------------------------------------------

// Drift velocity that diagonalises the t-x block: v_d = -tan(2 k ln r).
// Throws errc::coordinate_patch_invalid when the patch condition fails.
double cylinder_drag_velocity(double k, double r);

// Open timelike interval (v_-, v_+) = v_d -+ sqrt(v_d^2 + 1).
VelocityBounds cylinder_velocity_bounds(double k, double r);

// Patch predicate: r > 0, finite parameters, cos(2 k ln r) > 0 (with an
// absolute guard against the degenerate cos == 0 boundary).
bool cylinder_patch_valid(double k, double r);

// Non-throwing admissibility: patch valid and v strictly inside the timelike
// interval with the relative margin.
bool cylinder_admissible(double k, double r, double v,
                         double margin = admissibility_margin);

struct CylinderParams {
    // Validates on construction: r > 0 and finite inputs
    // (errc::invalid_argument), patch condition (errc::coordinate_patch_invalid),
    // v strictly inside the timelike interval (errc::observer_not_timelike).
    CylinderParams(double k, double r, double v);

    double k;  // momentum parameter of the source
    double r;  // coordinate radius of the observer ring
    double v;  // linear velocity along x
};

// Comoving local metric of the ring observer.
LocalMetric cylinder_local_metric(const CylinderParams& p);

// ---------------------------------------------------------------------------
// Kerr equatorial circular orbits (Boyer-Lindquist, theta = pi/2).
// ---------------------------------------------------------------------------

// Horizon function Delta = r^2 + a^2 - 2 M r.
double kerr_delta(double M, double a, double r);

// Equatorial combination A = (r^2 + a^2) r^2 + 2 M r a^2.
double kerr_A_equatorial(double M, double a, double r);

// Frame-dragging (ZAMO) angular velocity omega_d = 2 M a r / A.
double kerr_drag_angular_velocity(double M, double a, double r);

// Open interval of timelike circular orbits
// Omega_{-+} = omega_d -+ r^2 sqrt(Delta) / A.
VelocityBounds kerr_angular_velocity_bounds(double M, double a, double r);

// Exterior predicate: M > 0, |a| <= M, r > 0 finite, Delta > 0.
bool kerr_exterior_valid(double M, double a, double r);

bool kerr_admissible(double M, double a, double r, double omega,
                     double margin = admissibility_margin);

struct KerrParams {
    // Validates on construction: M > 0, r > 0, finite inputs
    // (errc::invalid_argument); |a| <= M and Delta > 0
    // (errc::horizon_violation); omega strictly inside the timelike interval
    // (errc::observer_not_timelike).
    KerrParams(double M, double a, double r, double omega);

    double M;      // mass (length units)
    double a;      // specific angular momentum, |a| <= M
    double r;      // Boyer-Lindquist radius, outside the horizon
    double omega;  // orbital angular velocity dphi/dt
};

// Comoving local metric of the circular orbit (x = local azimuthal axis,
// y = radial, z = polar).
LocalMetric kerr_equatorial_local_metric(const KerrParams& p);

// Redshift-like root R = sqrt(1 - A^2 (omega - omega_d)^2 / (Delta r^4)),
// which is also sqrt(g_tt g_xx / g_tilde) of the local metric.  Throws
// errc::observer_not_timelike if the root argument is not positive.
double kerr_R(const KerrParams& p);

}  // namespace casimir
