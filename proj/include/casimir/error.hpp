#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Stable machine-readable error codes. The CLI re-emits these verbatim in its
// JSON error documents, so they must not change spelling.
namespace errc {
inline constexpr const char* invalid_argument = "INVALID_ARGUMENT";
inline constexpr const char* invalid_metric = "INVALID_METRIC";
inline constexpr const char* observer_not_timelike = "OBSERVER_NOT_TIMELIKE";
inline constexpr const char* coordinate_patch_invalid = "COORDINATE_PATCH_INVALID";
inline constexpr const char* horizon_violation = "HORIZON_VIOLATION";
inline constexpr const char* mode_branch = "MODE_OUTSIDE_ALLOWED_BRANCH";
inline constexpr const char* series_range = "SERIES_RANGE";
inline constexpr const char* no_convergence = "NO_CONVERGENCE";
inline constexpr const char* usage = "USAGE";
inline constexpr const char* io_error = "IO_ERROR";
}  // namespace errc

class Error : public std::runtime_error {
public:
    Error(const char* code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    const char* code() const noexcept { return code_; }

private:
    const char* code_;
};

// Thrown when an iterative scheme exhausts its budget; carries the best
// estimate reached so callers can report it.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double best_estimate)
        : Error(errc::no_convergence, message), best_(best_estimate) {}

    double best_estimate() const noexcept { return best_; }

private:
    double best_;
};

}  // namespace casimir
