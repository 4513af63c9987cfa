#include "pirick/error.hpp"

namespace pirick {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyFactorList: return "EmptyFactorList";
        case ErrorKind::ZeroFactor: return "ZeroFactor";
        case ErrorKind::InconsistentConstants: return "InconsistentConstants";
        case ErrorKind::NonAssociative: return "NonAssociative";
        case ErrorKind::BadIdentity: return "BadIdentity";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::UnknownRing: return "UnknownRing";
        case ErrorKind::UnknownTheorem: return "UnknownTheorem";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string witness,
             std::size_t position)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)),
      position_(position) {}

}  // namespace pirick
