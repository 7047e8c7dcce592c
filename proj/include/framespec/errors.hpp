#pragma once

#include <stdexcept>
#include <string>

namespace framespec {

// Base class for every error thrown by the library. Each concrete type marks
// one failed precondition or invariant so callers can map failures to exit
// codes without parsing messages.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shapes disagree (vector lengths, matrix dimensions, basis sizes).
struct DimensionMismatch : Error {
    using Error::Error;
};

// A matrix required to be Hermitian is not, beyond the stated tolerance.
struct NotHermitian : Error {
    using Error::Error;
};

// The lower frame bound vanishes: the vectors do not span the space.
struct NotAFrame : Error {
    using Error::Error;
};

// The frame operator is not the identity within the stated tolerance.
struct NotParseval : Error {
    using Error::Error;
};

// A matrix required to be an orthogonal projector fails Hermiticity or
// idempotence beyond the stated tolerance.
struct NotProjector : Error {
    using Error::Error;
};

// A vector family required to be orthonormal is not.
struct NotOrthonormal : Error {
    using Error::Error;
};

// An internally verified numerical contract failed (residual too large,
// iteration cap hit, norm drift).
struct NumericalFailure : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagree. Always a bug
// or a genuinely ill-conditioned input; never swallowed.
struct InternalInconsistency : Error {
    using Error::Error;
};

// A coefficient list does not match the frame cardinality.
struct LengthMismatch : Error {
    using Error::Error;
};

// An input violates a documented domain restriction (non-positive weight,
// zero vector where a nonzero one is required, ...). The message names the
// offending indices.
struct PreconditionViolated : Error {
    using Error::Error;
};

// A coefficient list required to be strictly increasing is not (spacing
// below resolution counts as a tie).
struct NotStrictlyIncreasing : Error {
    using Error::Error;
};

// A mixing angle outside the open interval (0, pi/2).
struct BetaOutOfRange : Error {
    using Error::Error;
};

// Block-construction size below the smallest supported value.
struct KTooSmall : Error {
    using Error::Error;
};

// Mode count outside the supported range.
struct NOutOfRange : Error {
    using Error::Error;
};

// A generated operator realization no longer matches its frozen calibration
// matrix: the operator conventions drifted.
struct ConventionMismatch : Error {
    using Error::Error;
};

// Malformed serialized input. The message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace framespec
