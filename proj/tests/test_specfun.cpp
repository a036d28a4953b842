#include "casimir/specfun.hpp"

#include "casimir/error.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

using namespace casimir;
using test_util::rel_err;

namespace {

// 20-significant-digit references computed in 40-digit arithmetic.
struct K2Ref {
    double z, value;
};
constexpr K2Ref k2_refs[] = {
    {1e-8, 19999999999999999.5},
    {1e-6, 1999999999999.5},
    {1e-4, 199999999.5000000126},
    {0.01, 19999.500068389410624},
    {0.5, 7.5501835512408694366},
    {1.0, 1.6248388986351774828},
    {2.0, 0.25375975456605586294},
    {3.0, 0.061510458471742037657},
    {5.0, 0.0053089437122234599581},
    {10.0, 2.1509817006932768731e-5},
    {20.0, 6.3295436122922281105e-10},
    {50.0, 3.5479318388581977384e-23},
    {100.0, 4.7502253038886402047e-45},
    {200.0, 1.2379694035112633098e-88},
    {500.0, 4.0083068568719768908e-219},
    {700.0, 4.6831281768188282127e-306},
};

}  // namespace

TEST_CASE("bessel_k2 matches high-precision references across both branches") {
    for (const auto& ref : k2_refs) {
        CAPTURE(ref.z);
        CHECK(rel_err(specfun::bessel_k2(ref.z), ref.value) < 1e-12);
    }
}

TEST_CASE("bessel_k2 limiting behaviour") {
    // Small-argument law K2(z) -> 2/z^2.
    for (double z : {1e-8, 1e-6, 1e-4}) {
        CHECK(rel_err(specfun::bessel_k2(z), 2.0 / (z * z)) < 1e-7);
    }
    // Large-argument law K2(z) -> sqrt(pi/2z) e^{-z} within 5% at z = 50.
    const double asym = std::sqrt(M_PI / 100.0) * std::exp(-50.0);
    CHECK(rel_err(specfun::bessel_k2(50.0), asym) < 0.05);
}

TEST_CASE("bessel_k2 is positive and strictly decreasing") {
    double prev = std::numeric_limits<double>::infinity();
    for (double z = 0.05; z <= 120.0; z *= 1.17) {
        const double value = specfun::bessel_k2(z);
        CHECK(value > 0.0);
        CHECK(value < prev);
        prev = value;
    }
}

TEST_CASE("bessel_k2 underflow cutoff returns exact zero") {
    CHECK(specfun::bessel_k2(700.0) > 0.0);
    CHECK(specfun::bessel_k2(700.0000001) == 0.0);
    CHECK(specfun::bessel_k2(1e6) == 0.0);
}

TEST_CASE("bessel_k2 rejects bad arguments") {
    test_util::require_error_code(errc::invalid_argument, [] { specfun::bessel_k2(0.0); });
    test_util::require_error_code(errc::invalid_argument, [] { specfun::bessel_k2(-1.0); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::bessel_k2(std::nan("")); });
}

TEST_CASE("quadrature oracle agrees with the kernel over eight decades") {
    // 50 log-spaced points in [1e-6, 50]; the two code paths share nothing
    // beyond std::exp.
    for (int i = 0; i < 50; ++i) {
        const double z = std::pow(10.0, -6.0 + 7.698970004336019 * i / 49.0);
        CAPTURE(z);
        const double main_value = specfun::bessel_k2(z);
        const double oracle = specfun::bessel_k2_integral_oracle(z, 1e-12);
        CHECK(rel_err(main_value, oracle) < 1e-10);
    }
    // Spot checks in the extreme tail.
    CHECK(rel_err(specfun::bessel_k2_integral_oracle(200.0, 1e-12),
                  1.2379694035112633098e-88) < 1e-9);
    CHECK(rel_err(specfun::bessel_k2_integral_oracle(700.0, 1e-12),
                  4.6831281768188282127e-306) < 1e-9);
}

TEST_CASE("quadrature oracle validates its tolerance range") {
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::bessel_k2_integral_oracle(1.0, 0.0); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::bessel_k2_integral_oracle(1.0, 1e-6); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::bessel_k2_integral_oracle(-2.0, 1e-10); });
}

TEST_CASE("casimir_series matches direct high-precision sums") {
    CHECK(rel_err(specfun::casimir_series(0.5, 0, 1e-10).value, 8.0448210075420430196) < 1e-9);
    CHECK(rel_err(specfun::casimir_series(2.0, 0, 1e-10).value, 0.25831062869444893936) < 1e-9);
    CHECK(rel_err(specfun::casimir_series(2.0, 1, 1e-10).value, -0.24958660707761224445) < 1e-9);
    CHECK(rel_err(specfun::casimir_series(6.0, 0, 1e-10).value, 0.0016926137756981035286) < 1e-9);
    CHECK(rel_err(specfun::casimir_series(6.0, 1, 1e-10).value, -0.0016913224652407890972) < 1e-9);
    CHECK(rel_err(specfun::casimir_series(40.0, 0, 1e-10).value, 8.8177176978426189727e-19) < 1e-9);
}

TEST_CASE("casimir_series agrees with an explicit 1e4-term reference sum") {
    // Independent check: partial sum with the quadrature-based K2.
    double reference = 0.0;
    for (int n = 1; n <= 10000; ++n) {
        const double z = 2.0 * n;
        if (z > 745.0) break;
        reference += specfun::bessel_k2_integral_oracle(z, 1e-12) / (double(n) * n);
    }
    const auto result = specfun::casimir_series(2.0, 0, 1e-10);
    CHECK(rel_err(result.value, reference) < 1e-9);
}

TEST_CASE("casimir_series signs and ordering") {
    for (double x : {0.01, 0.1, 1.0, 5.0, 20.0}) {
        CAPTURE(x);
        const double s0 = specfun::casimir_series(x, 0, 1e-10).value;
        const double s1 = specfun::casimir_series(x, 1, 1e-10).value;
        CHECK(s0 > 0.0);       // all-Dirichlet sum is positive
        CHECK(s1 < 0.0);       // alternating sum starts negative
        CHECK(std::abs(s1) < s0);
    }
}

TEST_CASE("casimir_series truncation bound is honest") {
    // Quadrupling the term count moves the value by less than the reported
    // tail bound.
    for (double x : {0.05, 0.3, 2.0, 10.0}) {
        for (int b : {0, 1}) {
            CAPTURE(x);
            CAPTURE(b);
            const auto base = specfun::casimir_series(x, b, 1e-10);
            const auto extended = specfun::casimir_series(x, b, 1e-10, 4 * base.terms_used);
            CHECK(extended.terms_used >= 4 * base.terms_used);
            CHECK(std::abs(extended.value - base.value) <= base.tail_bound);
            // And the bound itself is small in relative terms, as requested.
            CHECK(base.tail_bound <= 1e-10 * std::abs(base.value));
        }
    }
}

TEST_CASE("casimir_series stability under small budget extensions") {
    const auto base = specfun::casimir_series(1.0, 0, 1e-10);
    const auto more = specfun::casimir_series(1.0, 0, 1e-10, base.terms_used + 10);
    CHECK(std::abs(more.value - base.value) <= base.tail_bound);
}

TEST_CASE("casimir_series handles total underflow gracefully") {
    const auto result = specfun::casimir_series(800.0, 0, 1e-10);
    CHECK(result.value == 0.0);
    CHECK(result.terms_used >= 1);
    CHECK(result.tail_bound == 0.0);
}

TEST_CASE("casimir_series rejects out-of-range input") {
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::casimir_series(-1.0, 0, 1e-10); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::casimir_series(1.0, 2, 1e-10); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::casimir_series(1.0, 0, 1e-7); });
    test_util::require_error_code(errc::invalid_argument,
                                  [] { specfun::casimir_series(1.0, 0, 0.0); });
    // Budget blow-up: for x this small the massless limit must be used.
    test_util::require_error_code(errc::series_range,
                                  [] { specfun::casimir_series(1e-9, 0, 1e-10); });
}
