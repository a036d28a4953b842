#pragma once

namespace casimir::specfun {

// Beyond this argument K2(z) < 5e-306; we report exact zero rather than
// risk the subnormal range.  The value is part of the documented contract.
inline constexpr double k2_underflow_cutoff = 700.0;

// Modified Bessel function of the second kind, order 2, for z > 0.
// Ascending series below z = 2, Steed/Thompson-Barnett continued fraction
// above; relative error <= 1e-12 over [1e-8, 700].  Returns 0 for
// z > k2_underflow_cutoff; throws errc::invalid_argument for z <= 0 or
// non-finite z.
double bessel_k2(double z);

// Independent cross-check of bessel_k2 through the integral representation
// K2(z) = \int_0^inf exp(-z cosh t) cosh(2t) dt, evaluated with adaptive
// Gauss-Kronrod quadrature.  Shares no kernels with bessel_k2.
// Requires 0 < rel_tol < 1e-6.
double bessel_k2_integral_oracle(double z, double rel_tol);

struct SeriesResult {
    double value;       // S(x, b)
    long terms_used;    // number of terms actually summed
    double tail_bound;  // provable bound on the neglected tail
};

// Dimensionless cavity sum S(x, b) = sum_{n>=1} (-1)^{bn} n^{-2} K2(n x)
// with x = 2 m L_p.  b = 0 gives the all-Dirichlet sum, b = 1 the mixed
// boundary (alternating) sum.  Terms are accumulated with compensated
// summation and truncated once a provable geometric tail bound drops below
// rel_tol * |partial sum|.  The bound uses K2(z + d) <= K2(z) e^{-d}, so the
// tail after term N is at most term_N * e^{-x} / (1 - e^{-x}).
//
// min_terms forces at least that many terms before truncation (used by
// convergence-honesty tests); 0 means no constraint.
//
// Errors: x <= 0 or non-finite, b outside {0, 1}, rel_tol outside (0, 1e-8]
// -> invalid_argument; term budget ceil(40/x) + 64 exceeding 1e8 ->
// series_range (the massless limit should be used instead); budget exhausted
// before the bound met -> ConvergenceError.
SeriesResult casimir_series(double x, int b, double rel_tol, long min_terms = 0);

}  // namespace casimir::specfun
