#pragma once

#include "casimir/backgrounds.hpp"
#include "casimir/energy.hpp"
#include "casimir/regimes.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace casimir::sweep {

struct KerrBackground {
    double M, a;
};
struct CylinderBackground {
    double k;
};

struct GridSpec {
    std::variant<KerrBackground, CylinderBackground> background;
    double r_min = 0.0, r_max = 0.0;
    int r_steps = 0;
    // Velocity (v or omega) range; std::nullopt = the admissible interval of
    // each radius, shrunk by the admissibility margin.
    std::optional<std::pair<double, double>> velocity_range;
    int velocity_steps = 0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    double mass = 0.0;
    double plate_separation = 1.0;
};

struct Row {
    double r, velocity;
    bool allowed;
    double eps_x, eps_y;  // meaningful only when allowed
    Regime regime_x, regime_y;
};

struct CriticalRow {
    double r;
    bool valid;  // radius lies on the background's admissible patch
    CriticalSet critical;
};

struct Result {
    GridSpec spec;
    std::vector<Row> rows;           // row-major: r outer, velocity inner
    std::vector<CriticalRow> curves; // one per radius
};

// Evaluates both orientations over the (r, velocity) grid.  threads = 0
// means one worker per hardware thread; output is independent of the worker
// count.  Throws errc::invalid_argument on malformed grids (non-positive
// step counts, r_min >= r_max with r_steps > 1, inverted velocity range).
Result run(const GridSpec& spec, int threads = 0);

// CSV with the exact header
//   r,omega,allowed,eps_x,eps_y,regime_x,regime_y
// floats rendered with %.17g, LF line endings, energy fields empty when
// allowed is false.  Byte-identical across runs and thread counts.
void write_csv(const Result& result, std::ostream& os);

// Sidecar document with the critical curves (drag, bounds, zero-energy, and
// the background-specific landmarks) per radius.
void write_critical_json(const Result& result, std::ostream& os);

// %.17g rendering shared by the CSV writer and the CLI tables.
std::string format_g17(double value);

}  // namespace casimir::sweep
