#pragma once

#include <stdexcept>
#include <string>

namespace cycres {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented operation precondition was violated (bad dimensions, zero
// polynomial, out-of-range index, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Genericity assumptions failed at runtime: coinciding subset products,
// singular cofactors, vanishing denominators.
struct NonGenericError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Input text or file could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

} // namespace cycres
