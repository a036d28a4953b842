#include "casimir/specfun.hpp"

#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/simd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace casimir::specfun {
namespace {

constexpr double euler_gamma = 0.5772156649015328606065120900824024;

// K0 and K1 on (0, 2] by their ascending series (Abramowitz & Stegun
// 9.6.11/9.6.13 rearranged so the digamma factors become harmonic numbers).
// Worst case, near z = 2, loses about one digit to cancellation.
void k01_series(double z, double& k0, double& k1) {
    const double q = 0.25 * z * z;  // (z/2)^2
    const double lg = std::log(0.5 * z);

    double t = 1.0;   // q^k / (k!)^2
    double u = 1.0;   // q^k / (k! (k+1)!)
    double i0 = 1.0;  // I0
    double i1s = 1.0; // I1 = (z/2) * i1s
    double s0 = 0.0;                                // sum t_k H_k, k >= 1
    double s1 = 1.0 - 2.0 * euler_gamma;            // k = 0 term of the K1 sum
    double h = 0.0;                                 // H_k

    for (int k = 1; k < 80; ++k) {
        t *= q / (static_cast<double>(k) * k);
        u *= q / (static_cast<double>(k) * (k + 1));
        h += 1.0 / k;
        i0 += t;
        i1s += u;
        s0 += t * h;
        s1 += u * (2.0 * h + 1.0 / (k + 1) - 2.0 * euler_gamma);
        if (t * (h + 1.0) < 1e-18 * i0) break;
    }

    k0 = -(lg + euler_gamma) * i0 + s0;
    k1 = 1.0 / z + lg * (0.5 * z * i1s) - 0.25 * z * s1;
}

// K0 and K1 for z > 2 by Steed's algorithm for the CF2 continued fraction
// (Thompson & Barnett form at order mu = 0).
void k01_cf2(double z, double& k0, double& k1) {
    constexpr int max_iter = 1000;
    constexpr double eps = 2.220446049250313e-16;

    const double a1 = 0.25;
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double delh = d;
    double h = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;

    for (int i = 2; i <= max_iter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels) < eps * std::abs(s)) {
            h *= a1;
            k0 = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
            k1 = k0 * (z + 0.5 - h) / z;
            return;
        }
    }
    throw ConvergenceError("bessel_k2: continued fraction stalled at z = " +
                               std::to_string(z),
                           0.0);
}

void kahan_add(double& sum, double& comp, double term) {
    // Neumaier variant: also safe when |term| > |sum|.
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
        comp += (sum - t) + term;
    else
        comp += (term - t) + sum;
    sum = t;
}

}  // namespace

double bessel_k2(double z) {
    if (!std::isfinite(z) || z <= 0.0)
        throw Error(errc::invalid_argument, "bessel_k2: argument must be positive and finite");
    if (z > k2_underflow_cutoff) return 0.0;

    double k0, k1;
    if (z <= 2.0)
        k01_series(z, k0, k1);
    else
        k01_cf2(z, k0, k1);
    return k0 + 2.0 * k1 / z;  // upward recurrence K2 = K0 + (2/z) K1
}

double bessel_k2_integral_oracle(double z, double rel_tol) {
    if (!std::isfinite(z) || z <= 0.0)
        throw Error(errc::invalid_argument, "bessel_k2_integral_oracle: argument must be positive and finite");
    if (!(rel_tol > 0.0) || !(rel_tol < 1e-6))
        throw Error(errc::invalid_argument, "bessel_k2_integral_oracle: rel_tol must lie in (0, 1e-6)");

    // Truncate where the integrand has decayed by e^{-60} relative to t = 0;
    // the neglected tail is far below any admissible tolerance.
    const double t_max = std::acosh(1.0 + 60.0 / z);
    const auto integrand = [z](double t) {
        return std::exp(-z * std::cosh(t)) * std::cosh(2.0 * t);
    };
    return quadrature::integrate(integrand, 0.0, t_max, rel_tol, 0.0).value;
}

SeriesResult casimir_series(double x, int b, double rel_tol, long min_terms) {
    if (!std::isfinite(x) || x <= 0.0)
        throw Error(errc::invalid_argument, "casimir_series: x must be positive and finite");
    if (b != 0 && b != 1)
        throw Error(errc::invalid_argument, "casimir_series: b must be 0 or 1");
    if (!(rel_tol > 0.0) || rel_tol > 1e-8)
        throw Error(errc::invalid_argument, "casimir_series: rel_tol must lie in (0, 1e-8]");
    if (min_terms < 0)
        throw Error(errc::invalid_argument, "casimir_series: min_terms must be >= 0");

    const double budget = std::ceil(40.0 / x) + 64.0;
    if (budget > 1e8)
        throw Error(errc::series_range,
                    "casimir_series: term budget exceeds 1e8; x is in massless-limit territory");
    const long n_max = std::max<long>(static_cast<long>(budget), min_terms);

    // K2(z + d) <= K2(z) e^{-d}, so after the N-th term the tail is bounded
    // by term_N * e^{-x} / (1 - e^{-x}).
    const double decay = std::exp(-x);
    const double tail_factor = decay / (1.0 - decay);

    double sum = 0.0, comp = 0.0;
    double last_term = 0.0;

    constexpr int block = 64;
    double zs[block], k2s[block];

    const auto& kernels = simd::active();
    long n = 0;
    while (n < n_max) {
        const int count = static_cast<int>(std::min<long>(block, n_max - n));
        for (int i = 0; i < count; ++i) zs[i] = static_cast<double>(n + 1 + i) * x;
        kernels.k2_batch(zs, k2s, static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const long idx = n + 1 + i;
            const double magnitude = k2s[i] / (static_cast<double>(idx) * static_cast<double>(idx));
            const bool negative = b == 1 && (idx & 1) != 0;
            kahan_add(sum, comp, negative ? -magnitude : magnitude);
            last_term = magnitude;
            const double bound = last_term * tail_factor;
            if (idx >= min_terms && bound <= rel_tol * std::abs(sum + comp))
                return SeriesResult{sum + comp, idx, bound};
        }
        n += count;
    }

    const double bound = last_term * tail_factor;
    if (bound <= rel_tol * std::abs(sum + comp))
        return SeriesResult{sum + comp, n_max, bound};
    throw ConvergenceError("casimir_series: budget exhausted before the tail bound was met",
                           sum + comp);
}

}  // namespace casimir::specfun
