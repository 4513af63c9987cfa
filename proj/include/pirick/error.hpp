#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pirick {

enum class ErrorKind {
    EmptyFactorList,
    ZeroFactor,
    InconsistentConstants,
    NonAssociative,
    BadIdentity,
    NotIdempotent,
    AxiomViolation,
    RingMismatch,
    SizeCapExceeded,
    Syntax,
    UnknownRing,
    UnknownTheorem,
    ParseError,
    Io,
};

const char* to_string(ErrorKind kind);

// Every library failure is reported through this type. `witness` carries the
// offending elements or triple in printable form; `position` is a 1-based line
// (file parsing) or column (expression parsing), 0 when not applicable.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string witness = {},
          std::size_t position = 0);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }
    std::size_t position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::string witness_;
    std::size_t position_;
};

}  // namespace pirick
