#include "casimir/sweep.hpp"

#include "casimir/error.hpp"
#include "casimir/serialize.hpp"
#include "casimir/simd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>
#include <vector>

namespace casimir::sweep {
namespace {

// Everything about one radius that the inner velocity loop needs.
struct RowGeometry {
    bool valid = false;
    double drag = 0.0;
    double inv_scale_sq = 0.0;   // 1 / (half-width of timelike interval)^2
    double sqrt_minus_gxx = 0.0; // proper x length = L sqrt(-g_xx) / R
    double lp_y = 0.0;           // proper y length (velocity independent)
    double auto_lo = 0.0, auto_hi = 0.0;
    CriticalSet critical{};
};

// Timelike check u < u_limit reproduces the open-interval admissibility
// margin: pad = margin * (2 half) off each end maps to u < (1 - 2 margin)^2.
constexpr double u_limit = (1.0 - 2.0 * admissibility_margin) *
                           (1.0 - 2.0 * admissibility_margin);

RowGeometry make_row_geometry(const GridSpec& spec, double r) {
    RowGeometry row;
    if (const auto* kerr = std::get_if<KerrBackground>(&spec.background)) {
        if (!kerr_exterior_valid(kerr->M, kerr->a, r)) return row;
        const double delta = kerr_delta(kerr->M, kerr->a, r);
        const double A = kerr_A_equatorial(kerr->M, kerr->a, r);
        const double half = r * r * std::sqrt(delta) / A;
        row.valid = true;
        row.drag = kerr_drag_angular_velocity(kerr->M, kerr->a, r);
        row.inv_scale_sq = 1.0 / (half * half);
        row.sqrt_minus_gxx = std::sqrt(A) / (r * r);
        row.lp_y = spec.plate_separation * r / std::sqrt(delta);
        row.critical = kerr_critical_set(kerr->M, kerr->a, r);
    } else {
        const auto& cyl = std::get<CylinderBackground>(spec.background);
        if (!cylinder_patch_valid(cyl.k, r)) return row;
        const double vd = cylinder_drag_velocity(cyl.k, r);
        const double d = vd * vd + 1.0;
        const double s = std::sqrt(1.0 + 3.0 * cyl.k * cyl.k);
        const double rho = std::pow(r, 2.0 * (1.0 - 2.0 * s) / 3.0);
        const double c = std::cos(2.0 * cyl.k * std::log(r));
        row.valid = true;
        row.drag = vd;
        row.inv_scale_sq = 1.0 / d;
        row.sqrt_minus_gxx = std::sqrt(rho * c);
        row.lp_y = spec.plate_separation;
        row.critical = cylinder_critical_set(cyl.k, r);
    }
    const double half = 1.0 / std::sqrt(row.inv_scale_sq);
    // Inset by 4x the admissibility pad so the end columns sit strictly
    // inside the u < u_limit cut instead of on it (which would make their
    // allowed flag a rounding coin-flip).
    const double pad = admissibility_margin * 8.0 * half;
    row.auto_lo = row.drag - half + pad;
    row.auto_hi = row.drag + half - pad;
    return row;
}

Regime label_from(double energy, double flat_reference) {
    if (std::abs(energy) <= null_tol * std::abs(flat_reference)) return Regime::Null;
    return energy < 0.0 ? Regime::Attractive : Regime::Repulsive;
}

double grid_value(double lo, double hi, int steps, int index) {
    if (steps == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(index) / (steps - 1);
}

void fill_row_block(const GridSpec& spec, const RowGeometry& geom, double r,
                    Row* out) {
    const int n = spec.velocity_steps;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (!geom.valid) {
        // Radius off the admissible patch: velocities are undefined for an
        // automatic range, so the whole block is Forbidden.
        for (int j = 0; j < n; ++j) {
            const double vel = spec.velocity_range
                                   ? grid_value(spec.velocity_range->first,
                                                spec.velocity_range->second, n, j)
                                   : nan;
            out[j] = Row{r, vel, false, 0.0, 0.0, Regime::Forbidden, Regime::Forbidden};
        }
        return;
    }

    const double lo = spec.velocity_range ? spec.velocity_range->first : geom.auto_lo;
    const double hi = spec.velocity_range ? spec.velocity_range->second : geom.auto_hi;

    std::vector<double> vel(n), big_r(n), pref_y(n);
    std::vector<unsigned char> allowed(n);
    for (int j = 0; j < n; ++j) vel[j] = grid_value(lo, hi, n, j);

    simd::active().prefactor_row(geom.drag, geom.inv_scale_sq, u_limit, vel.data(),
                                 static_cast<std::size_t>(n), big_r.data(),
                                 pref_y.data(), allowed.data());

    const double flat_y =
        casimir_energy_flat_massive(spec.mass, geom.lp_y, spec.bc);

    for (int j = 0; j < n; ++j) {
        if (!allowed[j]) {
            out[j] = Row{r, vel[j], false, 0.0, 0.0, Regime::Forbidden, Regime::Forbidden};
            continue;
        }
        const double lp_x =
            spec.plate_separation * geom.sqrt_minus_gxx / big_r[j];
        const double flat_x = casimir_energy_flat_massive(spec.mass, lp_x, spec.bc);
        const double eps_x = big_r[j] * flat_x;
        const double eps_y = pref_y[j] * flat_y;
        out[j] = Row{r,     vel[j],
                     true,  eps_x,
                     eps_y, label_from(eps_x, flat_x),
                     label_from(eps_y, flat_y)};
    }
}

}  // namespace

Result run(const GridSpec& spec, int threads) {
    if (spec.r_steps < 1 || spec.velocity_steps < 1)
        throw Error(errc::invalid_argument, "sweep: step counts must be >= 1");
    if (!std::isfinite(spec.r_min) || !std::isfinite(spec.r_max))
        throw Error(errc::invalid_argument, "sweep: radius range must be finite");
    if (spec.r_steps > 1 && !(spec.r_max > spec.r_min))
        throw Error(errc::invalid_argument, "sweep: need r_max > r_min for r_steps > 1");
    if (spec.velocity_range) {
        const auto& vr = *spec.velocity_range;
        if (!std::isfinite(vr.first) || !std::isfinite(vr.second) ||
            (spec.velocity_steps > 1 && !(vr.second > vr.first)))
            throw Error(errc::invalid_argument, "sweep: bad velocity range");
    }
    if (threads < 0)
        throw Error(errc::invalid_argument, "sweep: thread count must be >= 0");
    // Validate the cavity parameters once up front (mass, separation).
    [[maybe_unused]] const CavityConfig probe(Orientation::X, spec.bc, spec.mass,
                                              spec.plate_separation);

    Result result;
    result.spec = spec;
    result.rows.resize(static_cast<std::size_t>(spec.r_steps) * spec.velocity_steps);
    result.curves.resize(static_cast<std::size_t>(spec.r_steps));

    const auto worker = [&](int r_begin, int r_end) {
        for (int i = r_begin; i < r_end; ++i) {
            const double r = grid_value(spec.r_min, spec.r_max, spec.r_steps, i);
            const RowGeometry geom = make_row_geometry(spec, r);
            result.curves[static_cast<std::size_t>(i)] =
                CriticalRow{r, geom.valid, geom.critical};
            fill_row_block(spec, geom, r,
                           result.rows.data() +
                               static_cast<std::size_t>(i) * spec.velocity_steps);
        }
    };

    int n_threads = threads == 0
                        ? static_cast<int>(std::thread::hardware_concurrency())
                        : threads;
    n_threads = std::max(1, std::min(n_threads, spec.r_steps));

    if (n_threads == 1) {
        worker(0, spec.r_steps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        const int chunk = (spec.r_steps + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(spec.r_steps, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return result;
}

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const Result& result, std::ostream& os) {
    os << "r,omega,allowed,eps_x,eps_y,regime_x,regime_y\n";
    for (const Row& row : result.rows) {
        os << format_g17(row.r) << ',' << format_g17(row.velocity) << ','
           << (row.allowed ? "true" : "false") << ',';
        if (row.allowed)
            os << format_g17(row.eps_x) << ',' << format_g17(row.eps_y);
        else
            os << ',';
        os << ',' << to_string(row.regime_x) << ',' << to_string(row.regime_y) << '\n';
    }
}

void write_critical_json(const Result& result, std::ostream& os) {
    nlohmann::json doc;
    if (const auto* kerr = std::get_if<KerrBackground>(&result.spec.background)) {
        doc["background"] = "kerr";
        doc["M"] = kerr->M;
        doc["a"] = kerr->a;
    } else {
        doc["background"] = "cylinder";
        doc["k"] = std::get<CylinderBackground>(result.spec.background).k;
    }
    doc["bc"] = to_string(result.spec.bc);
    doc["mass"] = result.spec.mass;
    doc["plate_separation"] = result.spec.plate_separation;

    nlohmann::json rows = nlohmann::json::array();
    for (const CriticalRow& row : result.curves) {
        nlohmann::json entry;
        entry["r"] = row.r;
        entry["valid"] = row.valid;
        if (row.valid) entry.update(critical_set_to_json(row.critical));
        rows.push_back(entry);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
}

}  // namespace casimir::sweep
