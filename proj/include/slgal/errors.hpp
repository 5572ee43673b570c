#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slgal {

enum class ErrorKind {
    InvalidParameter,
    Schema,
    InvariantViolation,
    Pole,
    SingularPoint,
    UnsupportedEquation,
    OutOfScope,
    PoleInSeries,
    Divergence,
    StepUnderflow,
    Tolerance,
    Geometry,
    DegenerateEdge,
    Precondition,
    EmptyRange,
    NonInvertible,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid_parameter";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::InvariantViolation: return "invariant_violation";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::SingularPoint: return "singular_point";
    case ErrorKind::UnsupportedEquation: return "unsupported_equation";
    case ErrorKind::OutOfScope: return "out_of_scope";
    case ErrorKind::PoleInSeries: return "pole_in_series";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::StepUnderflow: return "step_underflow";
    case ErrorKind::Tolerance: return "tolerance";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::DegenerateEdge: return "degenerate_edge";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::EmptyRange: return "empty_range";
    case ErrorKind::NonInvertible: return "non_invertible";
    }
    return "unknown";
}

}  // namespace slgal
