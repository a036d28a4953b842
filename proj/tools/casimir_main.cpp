// Command-line front end: energy, sweep, critical, verify, convert.
// Success prints a single JSON document (or CSV summary) on stdout; failures
// print {"code","message"} JSON on stderr and exit 2 (domain) or 64 (usage).

#include "casimir/backgrounds.hpp"
#include "casimir/energy.hpp"
#include "casimir/error.hpp"
#include "casimir/oracle.hpp"
#include "casimir/regimes.hpp"
#include "casimir/serialize.hpp"
#include "casimir/simd.hpp"
#include "casimir/sweep.hpp"
#include "casimir/units.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace casimir;

// Geometric field mass (1/m) from kg: inverse reduced Compton wavelength.
double field_mass_from_kg(double kg) {
    return kg * units::c_m_per_s / units::hbar_si;
}

Orientation parse_orientation(const std::string& s) {
    if (s == "x") return Orientation::X;
    if (s == "y") return Orientation::Y;
    throw Error(errc::usage, "orientation must be 'x' or 'y'");
}

BoundaryCondition parse_bc(const std::string& s) {
    if (s == "dirichlet") return BoundaryCondition::Dirichlet;
    if (s == "mixed") return BoundaryCondition::Mixed;
    throw Error(errc::usage, "bc must be 'dirichlet' or 'mixed'");
}

bool parse_si(const std::string& s) {
    if (s == "geometric") return false;
    if (s == "si") return true;
    throw Error(errc::usage, "units must be 'geometric' or 'si'");
}

json critical_json_in_units(const CriticalSet& cs, bool si) {
    json j = critical_set_to_json(cs);
    if (si) {
        // Every member of a critical set is velocity-like; emit in SI.
        for (auto& [key, value] : j.items())
            value = value.get<double>() * units::c_m_per_s;
    }
    return j;
}

// ---------------------------------------------------------------- energy --

struct EnergyArgs {
    std::string metric;
    double k = 0.0, r = 0.0, v = 0.0;
    double M = 1.0, a = 0.0, omega = 0.0;
    std::string orientation = "x", bc = "dirichlet", units = "geometric";
    double mass = 0.0, length = 1.0;
};

int cmd_energy(const EnergyArgs& raw) {
    EnergyArgs args = raw;
    const bool si = parse_si(args.units);
    if (si) {
        args.M = units::convert(args.M, units::Kind::MassKg, units::Direction::ToGeometric);
        args.omega = units::convert(args.omega, units::Kind::AngularVelocitySi,
                                    units::Direction::ToGeometric);
        args.v /= units::c_m_per_s;
        args.mass = field_mass_from_kg(args.mass);
    }

    const Orientation orientation = parse_orientation(args.orientation);
    const BoundaryCondition bc = parse_bc(args.bc);
    const CavityConfig cavity(orientation, bc, args.mass, args.length);

    std::optional<LocalMetric> metric;
    std::optional<CriticalSet> critical;
    if (args.metric == "flat") {
        metric = LocalMetric::minkowski();
    } else if (args.metric == "cylinder") {
        metric = cylinder_local_metric(CylinderParams(args.k, args.r, args.v));
        critical = cylinder_critical_set(args.k, args.r);
    } else if (args.metric == "kerr") {
        metric = kerr_equatorial_local_metric(KerrParams(args.M, args.a, args.r, args.omega));
        critical = kerr_critical_set(args.M, args.a, args.r);
    } else {
        throw Error(errc::usage, "metric must be 'flat', 'cylinder' or 'kerr'");
    }

    const EnergyResult result = casimir_energy_density(*metric, cavity);
    const double lp = proper_length(*metric, cavity);

    json out;
    out["metric"] = args.metric;
    out["orientation"] = args.orientation;
    out["bc"] = args.bc;
    out["units"] = args.units;
    out["prefactor"] = result.prefactor;
    out["regime"] = to_string(result.regime);
    out["sign_flipped"] = sign_flipped(*metric, orientation);
    if (si) {
        const auto kind = units::Kind::EnergyDensityGeometric;
        out["energy_density"] = units::convert(result.energy_density, kind,
                                               units::Direction::ToSi);
        out["flat_reference_Em"] = units::convert(result.flat_reference, kind,
                                                  units::Direction::ToSi);
    } else {
        out["energy_density"] = result.energy_density;
        out["flat_reference_Em"] = result.flat_reference;
    }
    out["proper_length"] = lp;  // geometric lengths are metres already
    out["critical_set"] = critical ? critical_json_in_units(*critical, si) : json(nullptr);

    std::cout << out.dump(2) << '\n';
    return 0;
}

// -------------------------------------------------------------- critical --

struct CriticalArgs {
    std::string background;
    double k = 0.0, M = 1.0, a = 0.0, r = 0.0;
    std::string units = "geometric";
};

int cmd_critical(const CriticalArgs& args) {
    const bool si = parse_si(args.units);
    json out;
    out["background"] = args.background;
    out["r"] = args.r;
    if (args.background == "cylinder") {
        out["k"] = args.k;
        out.update(critical_json_in_units(cylinder_critical_set(args.k, args.r), si));
    } else if (args.background == "kerr") {
        out["M"] = args.M;
        out["a"] = args.a;
        out.update(critical_json_in_units(kerr_critical_set(args.M, args.a, args.r), si));
    } else {
        throw Error(errc::usage, "background must be 'cylinder' or 'kerr'");
    }
    out["units"] = args.units;
    std::cout << out.dump(2) << '\n';
    return 0;
}

// ----------------------------------------------------------------- sweep --

struct SweepArgs {
    std::string background;
    double k = 0.0, M = 1.0, a = 0.0;
    double r_min = 0.0, r_max = 0.0;
    int r_steps = 0, vel_steps = 0;
    double vel_min = 0.0, vel_max = 0.0;
    bool has_vel_range = false;
    std::string bc = "dirichlet", units = "geometric";
    double mass = 0.0, length = 1.0;
    std::string out_path, critical_path;
    int threads = 0;
};

int cmd_sweep(const SweepArgs& raw) {
    SweepArgs args = raw;
    if (args.r_steps < 2 || args.vel_steps < 2)
        throw Error(errc::usage, "step counts must be at least 2");
    const bool si = parse_si(args.units);
    if (si) {
        args.M = units::convert(args.M, units::Kind::MassKg, units::Direction::ToGeometric);
        args.mass = field_mass_from_kg(args.mass);
        if (args.has_vel_range) {
            const double f = args.background == "cylinder"
                                 ? 1.0 / units::c_m_per_s
                                 : units::convert(1.0, units::Kind::AngularVelocitySi,
                                                  units::Direction::ToGeometric);
            args.vel_min *= f;
            args.vel_max *= f;
        }
    }

    sweep::GridSpec spec;
    if (args.background == "cylinder")
        spec.background = sweep::CylinderBackground{args.k};
    else if (args.background == "kerr")
        spec.background = sweep::KerrBackground{args.M, args.a};
    else
        throw Error(errc::usage, "background must be 'cylinder' or 'kerr'");
    spec.r_min = args.r_min;
    spec.r_max = args.r_max;
    spec.r_steps = args.r_steps;
    spec.velocity_steps = args.vel_steps;
    if (args.has_vel_range) spec.velocity_range = {args.vel_min, args.vel_max};
    spec.bc = parse_bc(args.bc);
    spec.mass = args.mass;
    spec.plate_separation = args.length;

    sweep::Result result = sweep::run(spec, args.threads);

    if (si) {
        // Emit velocities and energy densities in SI; radii are metres.
        const double vc = units::c_m_per_s;
        for (auto& row : result.rows) {
            row.velocity *= vc;
            row.eps_x = units::convert(row.eps_x, units::Kind::EnergyDensityGeometric,
                                       units::Direction::ToSi);
            row.eps_y = units::convert(row.eps_y, units::Kind::EnergyDensityGeometric,
                                       units::Direction::ToSi);
        }
        for (auto& curve : result.curves) {
            curve.critical.drag *= vc;
            curve.critical.bounds.lower *= vc;
            curve.critical.bounds.upper *= vc;
            curve.critical.zero_energy.lower *= vc;
            curve.critical.zero_energy.upper *= vc;
            if (curve.critical.unit_flip) {
                curve.critical.unit_flip->lower *= vc;
                curve.critical.unit_flip->upper *= vc;
            }
            if (curve.critical.geodesic) {
                curve.critical.geodesic->lower *= vc;
                curve.critical.geodesic->upper *= vc;
            }
        }
    }

    const std::string critical_path =
        args.critical_path.empty() ? args.out_path + ".critical.json" : args.critical_path;

    std::ofstream csv(args.out_path, std::ios::binary);
    if (!csv) throw Error(errc::io_error, "cannot open '" + args.out_path + "' for writing");
    sweep::write_csv(result, csv);
    if (!csv.flush()) throw Error(errc::io_error, "failed writing '" + args.out_path + "'");

    std::ofstream sidecar(critical_path, std::ios::binary);
    if (!sidecar)
        throw Error(errc::io_error, "cannot open '" + critical_path + "' for writing");
    sweep::write_critical_json(result, sidecar);
    if (!sidecar.flush()) throw Error(errc::io_error, "failed writing '" + critical_path + "'");

    json summary;
    summary["out"] = args.out_path;
    summary["critical_out"] = critical_path;
    summary["rows"] = result.rows.size();
    summary["simd"] = simd::to_string(simd::active_isa());
    std::cout << summary.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------- verify --

int cmd_verify(std::uint64_t seed, int samples) {
    const auto reports = oracle::verify_all(seed, samples);
    int failures = 0;
    std::printf("%-26s %23s %23s %11s %8s %9s %s\n", "quantity", "main", "oracle",
                "rel_gap", "budget", "tol", "status");
    for (const auto& rep : reports) {
        if (!rep.pass) ++failures;
        std::printf("%-26s %23.15e %23.15e %11.3e %8ld %9.1e %s\n",
                    rep.quantity.c_str(), rep.main_value, rep.oracle_value,
                    rep.relative_gap, rep.budget, rep.tolerance,
                    rep.pass ? "PASS" : "FAIL");
    }
    std::printf("%zu checks, %d failures\n", reports.size(), failures);
    return failures == 0 ? 0 : 1;
}

// --------------------------------------------------------------- convert --

int cmd_convert(double value, const std::string& kind_name, const std::string& to) {
    const units::Kind kind = units::parse_kind(kind_name);
    units::Direction direction;
    if (to == "geometric")
        direction = units::Direction::ToGeometric;
    else if (to == "si")
        direction = units::Direction::ToSi;
    else
        throw Error(errc::usage, "--to must be 'geometric' or 'si'");

    json out;
    out["value"] = units::convert(value, kind, direction);
    out["kind"] = kind_name;
    out["direction"] = to;
    std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir vacuum energy between plates in stationary spacetimes"};
    app.require_subcommand(1);

    EnergyArgs energy;
    auto* cmd_e = app.add_subcommand("energy", "energy density at one configuration");
    cmd_e->add_option("--metric", energy.metric, "flat|cylinder|kerr")->required();
    cmd_e->add_option("--k", energy.k, "cylinder momentum parameter");
    cmd_e->add_option("--r", energy.r, "radius");
    cmd_e->add_option("--v", energy.v, "cylinder ring velocity");
    cmd_e->add_option("--M", energy.M, "Kerr mass");
    cmd_e->add_option("--a", energy.a, "Kerr spin");
    cmd_e->add_option("--omega", energy.omega, "Kerr orbital angular velocity");
    cmd_e->add_option("--orientation", energy.orientation, "x|y");
    cmd_e->add_option("--bc", energy.bc, "dirichlet|mixed");
    cmd_e->add_option("--mass", energy.mass, "field mass");
    cmd_e->add_option("--length", energy.length, "coordinate plate separation");
    cmd_e->add_option("--units", energy.units, "geometric|si");

    CriticalArgs critical;
    auto* cmd_c = app.add_subcommand("critical", "critical velocities at one radius");
    cmd_c->add_option("--background", critical.background, "cylinder|kerr")->required();
    cmd_c->add_option("--k", critical.k, "cylinder momentum parameter");
    cmd_c->add_option("--M", critical.M, "Kerr mass");
    cmd_c->add_option("--a", critical.a, "Kerr spin");
    cmd_c->add_option("--r", critical.r, "radius")->required();
    cmd_c->add_option("--units", critical.units, "geometric|si");

    SweepArgs sweep_args;
    auto* cmd_s = app.add_subcommand("sweep", "grid sweep over radius and velocity");
    cmd_s->add_option("--background", sweep_args.background, "cylinder|kerr")->required();
    cmd_s->add_option("--k", sweep_args.k, "cylinder momentum parameter");
    cmd_s->add_option("--M", sweep_args.M, "Kerr mass");
    cmd_s->add_option("--a", sweep_args.a, "Kerr spin");
    cmd_s->add_option("--r-min", sweep_args.r_min, "lowest radius")->required();
    cmd_s->add_option("--r-max", sweep_args.r_max, "highest radius")->required();
    cmd_s->add_option("--r-steps", sweep_args.r_steps, "radius count")->required();
    cmd_s->add_option("--vel-steps,--omega-steps,--v-steps", sweep_args.vel_steps,
                      "velocity count")->required();
    auto* vmin = cmd_s->add_option("--vel-min,--omega-min,--v-min", sweep_args.vel_min,
                                   "velocity range start (default: admissible band)");
    auto* vmax = cmd_s->add_option("--vel-max,--omega-max,--v-max", sweep_args.vel_max,
                                   "velocity range end");
    vmin->needs(vmax);
    vmax->needs(vmin);
    cmd_s->add_option("--bc", sweep_args.bc, "dirichlet|mixed");
    cmd_s->add_option("--mass", sweep_args.mass, "field mass");
    cmd_s->add_option("--length", sweep_args.length, "coordinate plate separation");
    cmd_s->add_option("--out", sweep_args.out_path, "CSV output path")->required();
    cmd_s->add_option("--critical-out", sweep_args.critical_path,
                      "sidecar JSON path (default: <out>.critical.json)");
    cmd_s->add_option("--threads", sweep_args.threads, "worker threads (0 = auto)");
    cmd_s->add_option("--units", sweep_args.units, "geometric|si");

    std::uint64_t seed = 0;
    int samples = 10;
    auto* cmd_v = app.add_subcommand("verify", "run the dual-path oracle suite");
    cmd_v->add_option("--seed", seed, "RNG seed");
    cmd_v->add_option("--samples", samples, "draws per check family")
        ->check(CLI::PositiveNumber);

    double conv_value = 0.0;
    std::string conv_kind, conv_to;
    auto* cmd_u = app.add_subcommand("convert", "convert between SI and geometric units");
    cmd_u->add_option("--value", conv_value, "value to convert")->required();
    cmd_u->add_option("--kind", conv_kind,
                      "mass_kg|mass_solar|angular_velocity_si|length_m|energy_density_geometric")
        ->required();
    cmd_u->add_option("--to", conv_to, "geometric|si")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::json err{{"code", errc::usage}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 64;
    }

    try {
        if (cmd_e->parsed()) return cmd_energy(energy);
        if (cmd_c->parsed()) return cmd_critical(critical);
        if (cmd_s->parsed()) return cmd_sweep(sweep_args);
        if (cmd_v->parsed()) return cmd_verify(seed, samples);
        if (cmd_u->parsed()) return cmd_convert(conv_value, conv_kind, conv_to);
        nlohmann::json err{{"code", errc::usage}, {"message", "no subcommand given"}};
        std::cerr << err.dump() << '\n';
        return 64;
    } catch (const casimir::Error& e) {
        nlohmann::json err{{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return std::string_view(e.code()) == errc::usage ? 64 : 2;
    } catch (const std::exception& e) {
        nlohmann::json err{{"code", "INTERNAL"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 70;
    }
}
