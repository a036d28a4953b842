#include "casimir/geometry.hpp"

#include "casimir/error.hpp"

#include <cmath>
#include <numbers>

namespace casimir {
namespace {

bool all_finite(double a, double b, double c, double d, double e) {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
           std::isfinite(d) && std::isfinite(e);
}

}  // namespace

int orientation_flag(Orientation orientation) {
    return orientation == Orientation::Y ? 1 : 0;
}

int boundary_flag(BoundaryCondition bc) {
    return bc == BoundaryCondition::Mixed ? 1 : 0;
}

const char* to_string(Orientation orientation) {
    return orientation == Orientation::Y ? "y" : "x";
}

const char* to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::Mixed ? "mixed" : "dirichlet";
}

LocalMetric::LocalMetric(double g_tt_, double g_tx_, double g_xx_, double g_yy_,
                         double g_zz_)
    : g_tt(g_tt_), g_tx(g_tx_), g_xx(g_xx_), g_yy(g_yy_), g_zz(g_zz_) {
    if (!all_finite(g_tt, g_tx, g_xx, g_yy, g_zz))
        throw Error(errc::invalid_metric, "LocalMetric: components must be finite");
    if (!(g_tt > 0.0))
        throw Error(errc::invalid_metric, "LocalMetric: g_tt must be positive (timelike t)");
    if (!(g_xx < 0.0) || !(g_yy < 0.0) || !(g_zz < 0.0))
        throw Error(errc::invalid_metric, "LocalMetric: spatial diagonal must be negative");
    // g_tilde = g_tt g_xx - g_tx^2 < 0 follows from the sign constraints.
}

LocalMetric LocalMetric::minkowski() { return LocalMetric(1.0, 0.0, -1.0, -1.0, -1.0); }

CavityConfig::CavityConfig(Orientation orientation_, BoundaryCondition bc_,
                           double mass_, double plate_separation_)
    : orientation(orientation_), bc(bc_), mass(mass_), plate_separation(plate_separation_) {
    if (!std::isfinite(mass) || mass < 0.0)
        throw Error(errc::invalid_argument, "CavityConfig: mass must be finite and >= 0");
    if (!std::isfinite(plate_separation) || !(plate_separation > 0.0))
        throw Error(errc::invalid_argument, "CavityConfig: plate separation must be positive");
}

double g_tilde(const LocalMetric& m) { return m.g_tt * m.g_xx - m.g_tx * m.g_tx; }

double drag_parameter(const LocalMetric& m) { return -m.g_tx / m.g_tt; }

double proper_length(const LocalMetric& m, const CavityConfig& cavity) {
    if (cavity.orientation == Orientation::X)
        return cavity.plate_separation * std::sqrt(-g_tilde(m) / m.g_tt);
    return cavity.plate_separation * std::sqrt(-m.g_yy);
}

double mode_frequency_squared(const LocalMetric& m, double k_x, double k_y,
                              double k_z, double mass) {
    if (!std::isfinite(k_x) || !std::isfinite(k_y) || !std::isfinite(k_z))
        throw Error(errc::invalid_argument, "mode_frequency_squared: wavevector must be finite");
    if (!std::isfinite(mass) || mass < 0.0)
        throw Error(errc::invalid_argument, "mode_frequency_squared: mass must be finite and >= 0");
    const double gt = g_tilde(m);
    // Each bracketed term is <= 0 for a valid metric, so -g_tt * (...) > 0
    // whenever (k, mass) != 0.
    const double bracket = (m.g_tt / gt) * k_x * k_x + k_y * k_y / m.g_yy +
                           k_z * k_z / m.g_zz - mass * mass;
    return -m.g_tt * bracket;
}

double discrete_wavenumber(int n, const CavityConfig& cavity) {
    if (n < 1)
        throw Error(errc::invalid_argument, "discrete_wavenumber: mode index starts at 1");
    const double b = boundary_flag(cavity.bc);
    return std::numbers::pi / cavity.plate_separation * (n - 0.5 * b);
}

double mode_norm_squared(const LocalMetric& m, const CavityConfig& cavity,
                         double omega, double k_x) {
    if (!std::isfinite(omega) || !(omega > 0.0))
        throw Error(errc::invalid_argument, "mode_norm_squared: omega must be positive");
    if (!std::isfinite(k_x))
        throw Error(errc::invalid_argument, "mode_norm_squared: k_x must be finite");

    const double gt = g_tilde(m);
    const double g4 = m.g_yy * m.g_zz * gt;  // full 4-determinant
    const double shift = (m.g_tt * m.g_tx / gt) * orientation_flag(cavity.orientation);
    const double denom = omega + shift * k_x;
    if (!(denom > 0.0))
        throw Error(errc::mode_branch,
                    "mode_norm_squared: mode lies outside the positive-frequency branch");

    const double root = std::sqrt(-m.g_tt * m.g_xx * m.g_yy * m.g_zz);
    const double two_pi = 2.0 * std::numbers::pi;
    return -m.g_tt * root / (g4 * two_pi * two_pi * cavity.plate_separation * denom);
}

double f_factor(const LocalMetric& m, const CavityConfig& cavity) {
    if (cavity.orientation == Orientation::X) return 1.0;
    // 1 + (g_tt/g^{xx}) (g_tx/g_tilde)^2 collapses to 1 + g_tx^2/g_tilde,
    // i.e. g_tt g_xx / g_tilde, which lies in (0, 1].
    return 1.0 + m.g_tx * m.g_tx / g_tilde(m);
}

}  // namespace casimir
