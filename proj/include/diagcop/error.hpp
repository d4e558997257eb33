#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagcop {

enum class ErrorCode {
    Malformed,          // unparsable input or structurally invalid piecewise-linear data
    ViolatesBound,      // delta(x) > x at some breakpoint
    SlopeOutOfRange,    // a segment slope outside [0, 2]
    EndpointMismatch,   // delta(0) != 0 or delta(1) != 1
    OutOfDomain,        // query point outside [0, 1]
    NoSlopeOneSegment,
    DiagonalMismatch,
    EmptyOmega,
    NotSimple,
    RouteMismatch,
    IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace diagcop
