#include "diagcop/error.hpp"

namespace diagcop {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Malformed: return "Malformed";
        case ErrorCode::ViolatesBound: return "ViolatesBound";
        case ErrorCode::SlopeOutOfRange: return "SlopeOutOfRange";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::NoSlopeOneSegment: return "NoSlopeOneSegment";
        case ErrorCode::DiagonalMismatch: return "DiagonalMismatch";
        case ErrorCode::EmptyOmega: return "EmptyOmega";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::RouteMismatch: return "RouteMismatch";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace diagcop
