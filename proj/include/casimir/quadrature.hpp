#pragma once

#include "casimir/error.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace casimir::quadrature {

struct Result {
    double value;
    double error_estimate;
    int evaluations;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (symmetric half listed).
inline constexpr double kr_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kr_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss-7 weights matching kr_nodes[1], [3], [5], [7].
inline constexpr double g_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fv1[8], fv2[8];
    double gauss = 0.0, kronrod = 0.0, resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kr_nodes[i];
        fv1[i] = f(mid - dx);
        fv2[i] = (i == 7) ? 0.0 : f(mid + dx);
        const double fsum = (i == 7) ? fv1[i] : fv1[i] + fv2[i];
        kronrod += kr_weights[i] * fsum;
        resabs += kr_weights[i] *
                  (std::abs(fv1[i]) + (i == 7 ? 0.0 : std::abs(fv2[i])));
        if (i % 2 == 1) gauss += g_weights[i / 2] * fsum;
    }
    // Scale integral of |f - mean| used to make the error estimate
    // dimensionless; without it the 1.5-power sharpening below would
    // understate the error whenever the integral itself is tiny.
    const double mean = kronrod * 0.5;
    double resasc = kr_weights[7] * std::abs(fv1[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kr_weights[i] *
                  (std::abs(fv1[i] - mean) + std::abs(fv2[i] - mean));
    kronrod *= half;
    gauss *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs(kronrod - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    // Never claim accuracy below a few ulps of the absolute mass.
    constexpr double uround = 2.220446049250313e-16;
    if (resabs > 2e-294) err = std::max(err, 50.0 * uround * resabs);
    return Panel{a, b, kronrod, err};
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b].  Bisects the
// worst panel until the summed error estimate drops below
// max(abs_tol, rel_tol * |integral|) or the panel budget is exhausted, in
// which case a ConvergenceError carrying the best estimate is thrown.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                 int max_panels = 4000) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(b > a))
        throw Error(errc::invalid_argument, "integrate: bad interval");
    if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0))
        throw Error(errc::invalid_argument, "integrate: bad tolerances");

    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gk15(f, a, b));
    int evaluations = 15;
    double total = panels.top().value;
    double total_err = panels.top().error;

    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (static_cast<int>(panels.size()) >= max_panels)
            throw ConvergenceError("integrate: panel budget exhausted", total);
        detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("integrate: interval vanished before tolerance was met", total);
        detail::Panel left = detail::gk15(f, worst.a, mid);
        detail::Panel right = detail::gk15(f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    return Result{total, total_err, evaluations};
}

}  // namespace casimir::quadrature
