#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace bsz {

enum class ErrorKind {
    SymmetryViolation,
    NonConvergence,
    DomainError,
    FactorizationResidual,
    RootInDisk,
    DegreeThreshold,
    ParityError,
    IllConditioned,
    DegreeExceeded,
    ConstraintViolated,
    RangeError,
    PoleProximity,
    SlowConvergence,
    NoConvergence,
    UnknownSuite,
    InvalidSpec,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what,
          std::optional<double> best = std::nullopt)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind), best_(best) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Best available estimate, set by the oracle on NoConvergence.
    std::optional<double> best_estimate() const noexcept { return best_; }

private:
    ErrorKind kind_;
    std::optional<double> best_;
};

}  // namespace bsz
