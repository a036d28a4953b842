#pragma once

namespace casimir {

enum class Orientation { X, Y };
enum class BoundaryCondition { Dirichlet = 0, Mixed = 1 };

// 0 for plates orthogonal to the drag direction (x), 1 for plates parallel
// to it (y).  Multiplies every term the orientation switches on or off.
int orientation_flag(Orientation orientation);

// b in the wavenumber offset (n - b/2) and the alternating sign (-1)^{bn}:
// 0 for Dirichlet-Dirichlet, 1 for mixed Dirichlet-Neumann plates.
int boundary_flag(BoundaryCondition bc);

const char* to_string(Orientation orientation);
const char* to_string(BoundaryCondition bc);

// Stationary 2+1+1 block metric restricted to the cavity neighbourhood, in
// comoving coordinates: ds^2 = g_tt dt^2 + 2 g_tx dt dx + g_xx dx^2
// + g_yy dy^2 + g_zz dz^2, signature (+,-,-,-).  The constructor enforces
// g_tt > 0, g_xx < 0, g_yy < 0, g_zz < 0 and finiteness and throws
// errc::invalid_metric otherwise, so a constructed value is always usable.
struct LocalMetric {
    LocalMetric(double g_tt, double g_tx, double g_xx, double g_yy, double g_zz);

    static LocalMetric minkowski();

    double g_tt, g_tx, g_xx, g_yy, g_zz;
};

// Plate pair: coordinate separation L along the orientation axis, scalar
// field mass (inverse-length units), boundary condition.  Throws
// errc::invalid_argument on L <= 0, mass < 0, or non-finite input.
struct CavityConfig {
    CavityConfig(Orientation orientation, BoundaryCondition bc, double mass,
                 double plate_separation);

    Orientation orientation;
    BoundaryCondition bc;
    double mass;
    double plate_separation;
};

// Reduced t-x block determinant g_tt g_xx - g_tx^2; always < 0 for a valid
// metric.
double g_tilde(const LocalMetric& m);

// Frame-drag parameter K = g^{tx}/g^{xx} = -g_tx/g_tt.
double drag_parameter(const LocalMetric& m);

// Proper plate separation: L sqrt(-g_tilde/g_tt) across x-oriented plates,
// L sqrt(-g_yy) across y-oriented ones.
double proper_length(const LocalMetric& m, const CavityConfig& cavity);

// Squared mode frequency from the dispersion relation in the drag-adapted
// frame; strictly positive for any valid metric, real wavevector and
// mass (the x contribution enters through -g_tilde/g_tt... all three spatial
// terms are non-negative).
double mode_frequency_squared(const LocalMetric& m, double k_x, double k_y,
                              double k_z, double mass);

// Quantised wavenumber of the n-th cavity mode, (pi/L)(n - b/2), n >= 1.
double discrete_wavenumber(int n, const CavityConfig& cavity);

// Klein-Gordon normalisation |N|^2 of a cavity mode with frequency omega and
// longitudinal wavenumber k_x.  The y-orientation branch requires
// omega + (g_tt g_tx / g_tilde) k_x > 0; violations throw errc::mode_branch.
double mode_norm_squared(const LocalMetric& m, const CavityConfig& cavity,
                         double omega, double k_x);

// Anisotropy factor F = 1 + (g_tt/g^{xx}) (g_tx G/g_tilde)^2 with G the
// orientation flag; equals 1 for x-oriented plates and g_tt g_xx/g_tilde
// (which lies in (0, 1]) for y-oriented ones.
double f_factor(const LocalMetric& m, const CavityConfig& cavity);

}  // namespace casimir
