#include "casimir/regimes.hpp"

#include "casimir/error.hpp"

#include <cmath>

namespace casimir {
namespace {

// sqrt(2 sqrt(3) - 3): offset (in units of sqrt(v_d^2+1)) at which the
// y-orientation energy equals minus the flat reference.
const double unit_flip_scale = std::sqrt(2.0 * std::sqrt(3.0) - 3.0);

// Sign the flat reference carries for each boundary condition: Dirichlet
// plates attract (E_m < 0), mixed plates repel (E_m > 0).
double flat_sign(BoundaryCondition bc) {
    return bc == BoundaryCondition::Mixed ? 1.0 : -1.0;
}

// Shared classification once the normalised offset u = (squared distance to
// the drag velocity over the squared half-width) is known to satisfy u < 1.
Regime classify_from_u(double u, Orientation orientation, BoundaryCondition bc) {
    const double r2 = 1.0 - u;
    const double pref = orientation == Orientation::X
                            ? std::sqrt(r2)
                            : (3.0 * r2 - 2.0) / (r2 * std::sqrt(r2));
    if (std::abs(pref) <= null_tol) return Regime::Null;
    const double energy_sign = pref * flat_sign(bc);
    return energy_sign < 0.0 ? Regime::Attractive : Regime::Repulsive;
}

}  // namespace

// ---------------------------------------------------------------- cylinder

double cylinder_zero_offset(double k, double r) {
    const double vd = cylinder_drag_velocity(k, r);
    return std::sqrt((vd * vd + 1.0) / 3.0);
}

CriticalSet cylinder_critical_set(double k, double r) {
    const double vd = cylinder_drag_velocity(k, r);
    const double d = vd * vd + 1.0;
    const double zero = std::sqrt(d / 3.0);
    const double flip = unit_flip_scale * std::sqrt(d);

    CriticalSet cs;
    cs.drag = vd;
    cs.bounds = cylinder_velocity_bounds(k, r);
    cs.zero_energy = VelocityBounds{vd - zero, vd + zero};
    cs.unit_flip = VelocityBounds{vd - flip, vd + flip};
    return cs;
}

double cylinder_energy_x(double k, double r, double v, const CavityConfig& cavity) {
    [[maybe_unused]] const CylinderParams p(k, r, v);  // validates patch + interval
    const double vd = cylinder_drag_velocity(k, r);
    const double d = vd * vd + 1.0;
    const double w = (v - vd) * (v - vd);
    const double big_r = std::sqrt(1.0 - w / d);

    // Proper separation along x from the line element itself.
    const double s = std::sqrt(1.0 + 3.0 * k * k);
    const double rho = std::pow(r, 2.0 * (1.0 - 2.0 * s) / 3.0);
    const double c = std::cos(2.0 * k * std::log(r));
    const double lp = cavity.plate_separation * std::sqrt(rho * c) / big_r;

    return big_r * casimir_energy_flat_massive(cavity.mass, lp, cavity.bc);
}

double cylinder_energy_y(double k, double r, double v, const CavityConfig& cavity) {
    [[maybe_unused]] const CylinderParams p(k, r, v);
    const double vd = cylinder_drag_velocity(k, r);
    const double d = vd * vd + 1.0;
    const double w = (v - vd) * (v - vd);
    const double pref = (d - 3.0 * w) * std::sqrt(d) / std::pow(d - w, 1.5);

    const double lp = cavity.plate_separation;  // g_yy = -1 on this background
    return pref * casimir_energy_flat_massive(cavity.mass, lp, cavity.bc);
}

Regime classify_cylinder(double k, double r, double v, Orientation orientation,
                         BoundaryCondition bc) {
    if (!cylinder_admissible(k, r, v)) return Regime::Forbidden;
    const double vd = cylinder_drag_velocity(k, r);
    const double u = (v - vd) * (v - vd) / (vd * vd + 1.0);
    return classify_from_u(u, orientation, bc);
}

// --------------------------------------------------------------------- kerr

VelocityBounds kerr_geodesic_angular_velocities(double M, double a, double r) {
    if (!kerr_exterior_valid(M, a, r))
        throw Error(errc::horizon_violation,
                    "kerr geodesics: radius must lie outside the horizon");
    const double sqrt_m = std::sqrt(M);
    const double r32 = std::pow(r, 1.5);
    return VelocityBounds{-sqrt_m / (r32 - a * sqrt_m), sqrt_m / (r32 + a * sqrt_m)};
}

CriticalSet kerr_critical_set(double M, double a, double r) {
    const double drag = kerr_drag_angular_velocity(M, a, r);
    const double r2 = r * r;
    const double delta = kerr_delta(M, a, r);
    const double A = kerr_A_equatorial(M, a, r);
    const double zero = r2 * std::sqrt(delta / 3.0) / A;

    CriticalSet cs;
    cs.drag = drag;
    cs.bounds = kerr_angular_velocity_bounds(M, a, r);
    cs.zero_energy = VelocityBounds{drag - zero, drag + zero};
    cs.geodesic = kerr_geodesic_angular_velocities(M, a, r);
    return cs;
}

namespace {

// Normalised squared offset u = A^2 (omega - omega_d)^2 / (Delta r^4);
// the timelike interval is exactly u < 1.
double kerr_u(const KerrParams& p) {
    const double delta = kerr_delta(p.M, p.a, p.r);
    const double A = kerr_A_equatorial(p.M, p.a, p.r);
    const double offset = p.omega - 2.0 * p.M * p.a * p.r / A;
    const double r2 = p.r * p.r;
    return A * A * offset * offset / (delta * r2 * r2);
}

}  // namespace

double kerr_energy_x(const KerrParams& p, const CavityConfig& cavity) {
    const double big_r = std::sqrt(1.0 - kerr_u(p));
    const double A = kerr_A_equatorial(p.M, p.a, p.r);
    const double lp = cavity.plate_separation * std::sqrt(A) / (p.r * p.r * big_r);
    return big_r * casimir_energy_flat_massive(cavity.mass, lp, cavity.bc);
}

double kerr_energy_y(const KerrParams& p, const CavityConfig& cavity) {
    const double r2 = 1.0 - kerr_u(p);
    const double pref = (3.0 * r2 - 2.0) / (r2 * std::sqrt(r2));
    const double lp =
        cavity.plate_separation * p.r / std::sqrt(kerr_delta(p.M, p.a, p.r));
    return pref * casimir_energy_flat_massive(cavity.mass, lp, cavity.bc);
}

double kerr_energy_ratio(double M, double a, double r, double omega) {
    const KerrParams p(M, a, r, omega);
    const double u = kerr_u(p);
    const double g = u / (1.0 - u);  // -g_tx^2 / (g_tt g_xx)
    return 1.0 - g * (1.0 + 2.0 * g);
}

double kerr_weak_field_x(double M, double a, double r, double omega) {
    return 1.0 - kerr_R(KerrParams(M, a, r, omega));
}

Regime classify_kerr(double M, double a, double r, double omega,
                     Orientation orientation, BoundaryCondition bc) {
    if (!kerr_admissible(M, a, r, omega)) return Regime::Forbidden;
    return classify_from_u(kerr_u(KerrParams(M, a, r, omega)), orientation, bc);
}

}  // namespace casimir
