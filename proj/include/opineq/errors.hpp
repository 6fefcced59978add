#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

// Error taxonomy. The CLI maps these onto exit codes: hypothesis/parse
// problems exit 2, inequality failures exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix dimensions disagree.
struct DimensionError : Error {
    using Error::Error;
};

// An eigenvalue (or scalar argument) falls outside a function's domain,
// or a numeric parameter is out of its allowed range.
struct DomainError : Error {
    using Error::Error;
};

// A theorem hypothesis does not hold for the supplied instance.
struct HypothesisError : Error {
    using Error::Error;
};

// Grid certification could not establish the claimed curvature direction.
struct ConvexityError : Error {
    using Error::Error;
};

// The dense eigensolver failed to converge.
struct SolverError : Error {
    using Error::Error;
};

// An instance generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

// Malformed JSON input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace opineq
