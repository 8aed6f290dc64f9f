#pragma once

#include <stdexcept>
#include <string>

namespace nltrans {

// Error taxonomy shared by all modules. The CLI maps each type to a
// distinct exit code (see tools/main.cpp and README).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A field value is NaN or infinite.
struct InvalidField : Error { using Error::Error; };

// Argument outside the documented domain of an operation.
struct InvalidParameter : Error { using Error::Error; };

// Negative-order multiplier applied to a field with nonzero mean.
struct UndefinedInverse : Error { using Error::Error; };

// Operation requires min(u) > 0 and the field violates it.
struct NonPositiveField : Error { using Error::Error; };

// Non-finite state produced while time stepping.
struct BlowUpDetected : Error { using Error::Error; };

// Malformed configuration text.
struct ParseError : Error { using Error::Error; };

// Well-formed configuration with a semantically invalid entry.
struct ValidationError : Error {
    std::string field;
    ValidationError(std::string field_, const std::string& msg)
        : Error(msg), field(std::move(field_)) {}
};

} // namespace nltrans
