#pragma once

#include <stdexcept>
#include <string>

namespace tumorml {

/// File could not be opened or read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File exists but is not decodable in any supported format.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input; the message names the offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative solver ran out of its iteration budget.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), kkt_residual(residual) {}

    double kkt_residual;
};

}  // namespace tumorml
