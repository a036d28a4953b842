#pragma once

#include "casimir/geometry.hpp"

namespace casimir {

enum class Regime { Attractive, Repulsive, Null, Forbidden };

const char* to_string(Regime regime);

// |energy| <= null_tol * |flat reference| is labelled Null.
inline constexpr double null_tol = 1e-9;

// Relative tolerance handed to the cavity sum by every energy evaluation.
inline constexpr double series_rel_tol = 1e-10;

// Below this value of 2 m L_p the massive series is numerically
// indistinguishable from the massless closed form, which is used instead.
inline constexpr double massless_crossover = 1e-6;

struct EnergyResult {
    double energy_density;   // mean vacuum energy density in the cavity
    double flat_reference;   // E_m at the same proper length and boundary
    double prefactor;        // energy_density / flat_reference
    Regime regime;
};

// Flat-space massless Casimir energy density between plates a proper
// distance L_p apart: -pi^2/(1440 L_p^4) for Dirichlet plates, scaled by
// -7/8 for mixed plates.  Throws errc::invalid_argument unless L_p > 0.
double casimir_energy_flat_massless(double proper_length, BoundaryCondition bc);

// Flat-space energy density of a field of mass m:
// E_m = -m^2/(8 pi^2 L_p^2) S(2 m L_p, b).  Delegates to the massless form
// for m == 0 or 2 m L_p below the crossover.
double casimir_energy_flat_massive(double mass, double proper_length,
                                   BoundaryCondition bc);

// Curvature/drag factor multiplying the flat reference:
// sqrt(g_tt g_xx/g_tilde) for x-oriented plates and, with
// R^2 = g_tt g_xx/g_tilde, (3 R^2 - 2)/R^3 for y-oriented ones.
double orientation_prefactor(const LocalMetric& m, Orientation orientation);

// Mean vacuum energy density between the plates, its flat reference at the
// local proper separation, and the regime label derived from the sign with
// the null_tol band.
EnergyResult casimir_energy_density(const LocalMetric& m, const CavityConfig& cavity);

// True when the orientation factor preserves the flat-space sign of the
// energy: always for x-oriented plates; for y-oriented ones iff
// g_tx^2 < -g_tt g_xx / 2.
bool keeps_flat_sign(const LocalMetric& m, Orientation orientation);

// Complement of keeps_flat_sign restricted to the strict inequality; true
// when drag is strong enough to reverse the sign of the force.
bool sign_flipped(const LocalMetric& m, Orientation orientation);

}  // namespace casimir
