#include "casimir/oracle.hpp"

#include "casimir/energy.hpp"
#include "casimir/error.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <cmath>

using namespace casimir;
using test_util::rel_err;

TEST_CASE("brute-force summation reproduces the main massive-energy path") {
    // 2000 quadrature-Bessel terms vs the accelerated series.
    const double brute = oracle::em_bruteforce(1.0, 1.0, 0, 2000);
    const double main_path =
        casimir_energy_flat_massive(1.0, 1.0, BoundaryCondition::Dirichlet);
    CHECK(rel_err(brute, main_path) < 1e-10);

    const double brute_mixed = oracle::em_bruteforce(0.75, 1.5, 1, 2000);
    const double main_mixed =
        casimir_energy_flat_massive(0.75, 1.5, BoundaryCondition::Mixed);
    CHECK(rel_err(brute_mixed, main_mixed) < 1e-10);
}

TEST_CASE("alternating partial sums bracket the mixed-condition energy") {
    // For b = 1 the series alternates, so consecutive truncations must
    // straddle the converged value (Leibniz criterion).
    const double reference =
        casimir_energy_flat_massive(1.0, 1.0, BoundaryCondition::Mixed);
    const double e3 = oracle::em_bruteforce(1.0, 1.0, 1, 3);
    const double e4 = oracle::em_bruteforce(1.0, 1.0, 1, 4);
    CHECK((e3 - reference) * (e4 - reference) < 0.0);
}

TEST_CASE("brute force truncates terms beyond the exponential underflow range") {
    // 2 m L_p = 800 > 745 for every term: the sum is empty.
    CHECK(oracle::em_bruteforce(400.0, 1.0, 0, 10) == 0.0);
}

TEST_CASE("numeric metric inversion: flat and dragged examples") {
    const LocalMetric flat = LocalMetric::minkowski();
    const oracle::InverseMetric inv = oracle::metric_inverse_oracle(flat);
    CHECK(inv.g_tt == 1.0);
    CHECK(inv.g_tx == 0.0);
    CHECK(inv.g_xx == -1.0);
    CHECK(inv.g_yy == -1.0);
    CHECK(inv.g_zz == -1.0);

    auto gen = test_util::rng(7);
    for (int i = 0; i < 50; ++i) {
        const double g_tt = test_util::uniform(gen, 0.1, 3.0);
        const double g_xx = -test_util::uniform(gen, 0.1, 3.0);
        const double max_tx = 0.95 * std::sqrt(g_tt * -g_xx);
        const double g_tx = test_util::uniform(gen, -max_tx, max_tx);
        const LocalMetric m(g_tt, g_tx, g_xx, -test_util::uniform(gen, 0.1, 3.0),
                            -test_util::uniform(gen, 0.1, 3.0));
        const oracle::InverseMetric inv2 = oracle::metric_inverse_oracle(m);

        // Analytic 2x2 block inverse.
        const double det = g_tilde(m);
        CHECK(rel_err(inv2.g_tt, m.g_xx / det) < 1e-13);
        CHECK(rel_err(inv2.g_xx, m.g_tt / det) < 1e-13);
        if (std::abs(g_tx) > 1e-3) CHECK(rel_err(inv2.g_tx, -m.g_tx / det) < 1e-12);
        CHECK(rel_err(inv2.g_yy, 1.0 / m.g_yy) < 1e-13);
        CHECK(rel_err(inv2.g_zz, 1.0 / m.g_zz) < 1e-13);

        // g . g^{-1} = identity on the t-x block.
        CHECK(std::abs(m.g_tt * inv2.g_tt + m.g_tx * inv2.g_tx - 1.0) < 1e-13);
        CHECK(std::abs(m.g_tt * inv2.g_tx + m.g_tx * inv2.g_xx) < 1e-13);
        CHECK(std::abs(m.g_tx * inv2.g_tt + m.g_xx * inv2.g_tx) < 1e-13);
    }
}

TEST_CASE("full verification suite passes and is deterministic") {
    const auto reports = oracle::verify_all(0, 10);
    // Nine rows per sample: K2, massive energy, cylinder x/y, kerr x/y,
    // inverse metric, prograde/retrograde geodesic.
    CHECK(reports.size() == 90);
    for (const auto& rep : reports) {
        CAPTURE(rep.quantity);
        CAPTURE(rep.main_value);
        CAPTURE(rep.oracle_value);
        CHECK(rep.pass);
        CHECK(rep.relative_gap <= rep.tolerance);
        CHECK(rep.tolerance > 0.0);
        CHECK_FALSE(rep.quantity.empty());
        CHECK(std::isfinite(rep.main_value));
        CHECK(std::isfinite(rep.oracle_value));
    }

    const auto again = oracle::verify_all(0, 10);
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].quantity == reports[i].quantity);
        CHECK(again[i].main_value == reports[i].main_value);
        CHECK(again[i].oracle_value == reports[i].oracle_value);
        CHECK(again[i].relative_gap == reports[i].relative_gap);
    }

    // A different seed draws different points.
    const auto other = oracle::verify_all(1, 10);
    bool any_diff = false;
    for (std::size_t i = 0; i < other.size(); ++i)
        if (other[i].main_value != reports[i].main_value) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("verification suite input validation") {
    test_util::require_error_code(errc::invalid_argument,
                                  [] { oracle::verify_all(0, 0); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { oracle::verify_all(0, -3); });
}

TEST_CASE("numeric geodesic solver rejects radii inside the horizon") {
    test_util::require_error_code(errc::horizon_violation,
                                  [] { oracle::kerr_geodesic_numeric(1.0, 0.0, 1.5); });
}
