#pragma once

#include "casimir/error.hpp"

#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

namespace test_util {

inline double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Checks that fn throws casimir::Error with the expected stable code.
template <class Fn>
void require_error_code(const char* code, Fn&& fn) {
    try {
        fn();
        FAIL_CHECK("expected error code " << code << " but nothing was thrown");
    } catch (const casimir::Error& e) {
        CHECK(std::string(e.code()) == code);
    }
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace test_util
