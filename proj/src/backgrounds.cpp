#include "casimir/backgrounds.hpp"

#include "casimir/error.hpp"

#include <cmath>

namespace casimir {
namespace {

// Degenerate-patch guard: cos(2 k ln r) this close to zero makes the drift
// velocity blow up faster than any admissible observer band.
constexpr double patch_cos_floor = 1e-12;

// Kasner-like exponent of the cylinder line element, q_- = (1 - 2 s)/3 with
// s = sqrt(1 + 3 k^2); q_+ is its conjugate (1 + 2 s)/3.
double cylinder_q_minus(double k) { return (1.0 - 2.0 * std::sqrt(1.0 + 3.0 * k * k)) / 3.0; }
double cylinder_q_plus(double k) { return (1.0 + 2.0 * std::sqrt(1.0 + 3.0 * k * k)) / 3.0; }

void check_cylinder_patch(double k, double r) {
    if (!std::isfinite(k) || !std::isfinite(r) || !(r > 0.0))
        throw Error(errc::invalid_argument, "cylinder: need finite k and r > 0");
    const double c = std::cos(2.0 * k * std::log(r));
    if (std::abs(c) <= patch_cos_floor)
        throw Error(errc::coordinate_patch_invalid,
                    "cylinder: cos(2 k ln r) degenerates; drift velocity undefined");
    if (c < 0.0)
        throw Error(errc::coordinate_patch_invalid,
                    "cylinder: outside the positive-cosine patch");
}

void check_kerr_exterior(double M, double a, double r) {
    if (!std::isfinite(M) || !std::isfinite(a) || !std::isfinite(r) || !(M > 0.0) || !(r > 0.0))
        throw Error(errc::invalid_argument, "kerr: need finite parameters with M > 0, r > 0");
    if (std::abs(a) > M)
        throw Error(errc::horizon_violation, "kerr: |a| > M has no horizon (naked singularity)");
    if (!(kerr_delta(M, a, r) > 0.0))
        throw Error(errc::horizon_violation, "kerr: radius is on or inside the horizon");
}

}  // namespace

// ---------------------------------------------------------------- cylinder

double cylinder_drag_velocity(double k, double r) {
    check_cylinder_patch(k, r);
    return -std::tan(2.0 * k * std::log(r));
}

VelocityBounds cylinder_velocity_bounds(double k, double r) {
    const double vd = cylinder_drag_velocity(k, r);
    const double half_width = std::sqrt(vd * vd + 1.0);
    return VelocityBounds{vd - half_width, vd + half_width};
}

bool cylinder_patch_valid(double k, double r) {
    if (!std::isfinite(k) || !std::isfinite(r) || !(r > 0.0)) return false;
    return std::cos(2.0 * k * std::log(r)) > patch_cos_floor;
}

bool cylinder_admissible(double k, double r, double v, double margin) {
    if (!cylinder_patch_valid(k, r) || !std::isfinite(v)) return false;
    const VelocityBounds b = cylinder_velocity_bounds(k, r);
    const double pad = margin * (b.upper - b.lower);
    return v > b.lower + pad && v < b.upper - pad;
}

CylinderParams::CylinderParams(double k_, double r_, double v_) : k(k_), r(r_), v(v_) {
    check_cylinder_patch(k, r);
    if (!std::isfinite(v))
        throw Error(errc::invalid_argument, "cylinder: velocity must be finite");
    if (!cylinder_admissible(k, r, v))
        throw Error(errc::observer_not_timelike,
                    "cylinder: ring velocity is outside the timelike interval");
}

LocalMetric cylinder_local_metric(const CylinderParams& p) {
    const double lr = std::log(p.r);
    const double rho = std::pow(p.r, 2.0 * cylinder_q_minus(p.k));
    const double c = std::cos(2.0 * p.k * lr);
    const double s = std::sin(2.0 * p.k * lr);

    const double g_xx = -rho * c;
    const double g_tx = g_xx * p.v - rho * s;
    const double g_tt = 2.0 * p.v * g_tx - (1.0 + p.v * p.v) * g_xx;
    const double g_yy = -1.0;
    const double g_zz = -std::pow(p.r, 2.0 * (cylinder_q_plus(p.k) - 1.0));
    return LocalMetric(g_tt, g_tx, g_xx, g_yy, g_zz);
}

// --------------------------------------------------------------------- kerr

double kerr_delta(double M, double a, double r) { return r * r + a * a - 2.0 * M * r; }

double kerr_A_equatorial(double M, double a, double r) {
    return (r * r + a * a) * r * r + 2.0 * M * r * a * a;
}

double kerr_drag_angular_velocity(double M, double a, double r) {
    check_kerr_exterior(M, a, r);
    return 2.0 * M * a * r / kerr_A_equatorial(M, a, r);
}

VelocityBounds kerr_angular_velocity_bounds(double M, double a, double r) {
    const double drag = kerr_drag_angular_velocity(M, a, r);
    const double half_width =
        r * r * std::sqrt(kerr_delta(M, a, r)) / kerr_A_equatorial(M, a, r);
    return VelocityBounds{drag - half_width, drag + half_width};
}

bool kerr_exterior_valid(double M, double a, double r) {
    if (!std::isfinite(M) || !std::isfinite(a) || !std::isfinite(r)) return false;
    if (!(M > 0.0) || !(r > 0.0) || std::abs(a) > M) return false;
    return kerr_delta(M, a, r) > 0.0;
}

bool kerr_admissible(double M, double a, double r, double omega, double margin) {
    if (!kerr_exterior_valid(M, a, r) || !std::isfinite(omega)) return false;
    const VelocityBounds b = kerr_angular_velocity_bounds(M, a, r);
    const double pad = margin * (b.upper - b.lower);
    return omega > b.lower + pad && omega < b.upper - pad;
}

KerrParams::KerrParams(double M_, double a_, double r_, double omega_)
    : M(M_), a(a_), r(r_), omega(omega_) {
    check_kerr_exterior(M, a, r);
    if (!std::isfinite(omega))
        throw Error(errc::invalid_argument, "kerr: omega must be finite");
    if (!kerr_admissible(M, a, r, omega))
        throw Error(errc::observer_not_timelike,
                    "kerr: orbital angular velocity is outside the timelike interval");
}

LocalMetric kerr_equatorial_local_metric(const KerrParams& p) {
    const double r2 = p.r * p.r;
    const double delta = kerr_delta(p.M, p.a, p.r);
    const double A = kerr_A_equatorial(p.M, p.a, p.r);
    const double drag = 2.0 * p.M * p.a * p.r / A;
    const double offset = p.omega - drag;

    const double g_xx = -A / (r2 * r2);
    const double g_tx = -(A / (r2 * p.r)) * offset;
    const double g_tt =
        (delta * r2 / A) * (1.0 - A * A * offset * offset / (delta * r2 * r2));
    const double g_yy = -r2 / delta;
    const double g_zz = -1.0;
    return LocalMetric(g_tt, g_tx, g_xx, g_yy, g_zz);
}

double kerr_R(const KerrParams& p) {
    const double r2 = p.r * p.r;
    const double delta = kerr_delta(p.M, p.a, p.r);
    const double A = kerr_A_equatorial(p.M, p.a, p.r);
    const double offset = p.omega - 2.0 * p.M * p.a * p.r / A;
    const double arg = 1.0 - A * A * offset * offset / (delta * r2 * r2);
    if (!(arg > 0.0))
        throw Error(errc::observer_not_timelike, "kerr_R: root argument is not positive");
    return std::sqrt(arg);
}

}  // namespace casimir
