#include "fractoback/error.hpp"

namespace fractoback {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::SmallArgument: return "SmallArgument";
        case ErrorKind::ContourFailure: return "ContourFailure";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::GridTooCoarse: return "GridTooCoarse";
        case ErrorKind::GridMismatch: return "GridMismatch";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::PrioriViolation: return "PrioriViolation";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool is_numeric_failure(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NoConvergence:
        case ErrorKind::ContourFailure:
        case ErrorKind::QuadratureFailure:
        case ErrorKind::SmallArgument:
            return true;
        default:
            return false;
    }
}

}  // namespace fractoback
