#pragma once

#include "casimir/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace casimir::oracle {

// One row of the self-verification table: a quantity computed by the main
// code path and by an independent oracle, with their relative gap
// |main - oracle| / max(|oracle|, 1e-300).
struct OracleReport {
    std::string quantity;
    double main_value;
    double oracle_value;
    double relative_gap;
    long budget;       // oracle effort: terms, evaluations or stencil points
    double tolerance;  // declared bound on the gap
    bool pass;         // relative_gap <= tolerance
};

// Brute-force flat massive energy: directly sums N terms of
// -m^2/(8 pi^2 L_p^2) (-1)^{bn} n^{-2} K2(2 m L_p n) with the
// quadrature-based K2 (no shared Bessel kernel with the main path).
// Terms whose argument puts exp(-z cosh t) at exact double zero are cut off.
double em_bruteforce(double mass, double proper_length, int b, long terms);

// Upper-index components of the inverse metric.
struct InverseMetric {
    double g_tt, g_tx, g_xx, g_yy, g_zz;
};

// Numerically inverts the t-x block with pivoted Gaussian elimination
// (independent of the analytic g_tilde expressions).
InverseMetric metric_inverse_oracle(const LocalMetric& m);

// Geodesic angular velocities recovered by root-solving the circular-orbit
// condition with numerically differentiated Boyer-Lindquist coefficients
// (4th-order central differences).  Returns {retrograde, prograde}.
struct GeodesicPair {
    double retrograde, prograde;
};
GeodesicPair kerr_geodesic_numeric(double M, double a, double r);

// Runs the full dual-path verification suite with `samples` draws per check
// family from a deterministic generator:
//   1. bessel_k2 vs the quadrature integral,
//   2. the flat massive energy vs brute-force summation,
//   3. cylinder closed forms vs the generic metric pipeline (both
//      orientations),
//   4. Kerr closed forms vs the generic metric pipeline (both orientations),
//   5. analytic inverse-metric components vs numeric inversion,
//   6. geodesic angular velocities vs the numerically differentiated
//      orbit condition.
// Identical seed and sample count give an identical report sequence.
// Throws errc::invalid_argument when samples < 1.
std::vector<OracleReport> verify_all(std::uint64_t seed, int samples);

}  // namespace casimir::oracle
