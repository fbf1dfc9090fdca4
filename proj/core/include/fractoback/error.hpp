#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fractoback {

/// Failure categories surfaced by the library. The CLI maps each onto an
/// exit code, so new kinds need a matching entry there.
enum class ErrorKind {
    InvalidParams,
    InvalidOrder,
    NoConvergence,
    SmallArgument,
    ContourFailure,
    LengthMismatch,
    GridTooCoarse,
    GridMismatch,
    QuadratureFailure,
    PrioriViolation,
    Config,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// True for failures of the numerics themselves (as opposed to bad input).
bool is_numeric_failure(ErrorKind kind) noexcept;

}  // namespace fractoback
