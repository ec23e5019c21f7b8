#include "bszego/error.hpp"

namespace bsz {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SymmetryViolation: return "SymmetryViolation";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::FactorizationResidual: return "FactorizationResidual";
        case ErrorKind::RootInDisk: return "RootInDisk";
        case ErrorKind::DegreeThreshold: return "DegreeThreshold";
        case ErrorKind::ParityError: return "ParityError";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::DegreeExceeded: return "DegreeExceeded";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::PoleProximity: return "PoleProximity";
        case ErrorKind::SlowConvergence: return "SlowConvergence";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
    }
    return "Error";
}

}  // namespace bsz
