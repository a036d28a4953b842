#pragma once

#include "casimir/regimes.hpp"

#include "json.hpp"

namespace casimir {

// Flat JSON object for a critical set; optional landmarks appear only when
// the background defines them.  Keys are part of the CLI output contract.
inline nlohmann::json critical_set_to_json(const CriticalSet& cs) {
    nlohmann::json j;
    j["drag"] = cs.drag;
    j["bound_minus"] = cs.bounds.lower;
    j["bound_plus"] = cs.bounds.upper;
    j["zero_minus"] = cs.zero_energy.lower;
    j["zero_plus"] = cs.zero_energy.upper;
    if (cs.unit_flip) {
        j["flip_minus"] = cs.unit_flip->lower;
        j["flip_plus"] = cs.unit_flip->upper;
    }
    if (cs.geodesic) {
        j["geo_minus"] = cs.geodesic->lower;
        j["geo_plus"] = cs.geodesic->upper;
    }
    return j;
}

}  // namespace casimir
