#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

enum class ErrorKind {
    MalformedInput,
    NonConvergence,
    InconsistentComponents,
    NonAbelian,
    SolverNonunique,
    SearchCapExceeded,
    NoSolution,
    FixedPoint,
    NonSubgroup,
    NonCentral,
    Degenerate,
    BoundsExceeded,
    UnknownFamily,
    ConstraintViolation,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fusion
