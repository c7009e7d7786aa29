#pragma once

#include <stdexcept>
#include <string>

namespace sopq {

// Base class for every error this library throws on its own behalf.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: wrong vector length, non-square matrix, negative counts.
struct DimensionError : Error {
    using Error::Error;
};

// Two objects carry incompatible signatures.
struct SignatureMismatchError : Error {
    using Error::Error;
};

// A matrix failed the group membership check at construction.
struct MembershipError : Error {
    MembershipError(const std::string& what, double form_residual, double det_residual)
        : Error(what), form_residual(form_residual), det_residual(det_residual) {}
    double form_residual;
    double det_residual;
};

// A vector is not on the requested quasi-sphere.
struct OffSurfaceError : Error {
    OffSurfaceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

// The requested quasi-sphere contains no points at all (X+ with p = 0).
struct EmptySurfaceError : Error {
    using Error::Error;
};

// Indefinite Gram-Schmidt could not find a pivot of nonzero magnitude.
struct DegeneracyError : Error {
    DegeneracyError(const std::string& what, int stage)
        : Error(what), stage(stage) {}
    int stage;
};

// Eigenvalue-level failure (non-SPD input to a spectral routine).
struct SpectralError : Error {
    SpectralError(const std::string& what, double eigenvalue)
        : Error(what), eigenvalue(eigenvalue) {}
    double eigenvalue;
};

// Polar decomposition produced a compact factor outside SO(p) x SO(q),
// which means the input was not in the identity component.
struct ComponentError : Error {
    using Error::Error;
};

// A stated operation precondition does not hold (non-unit chart vector,
// a fiber map argument that does not stabilize e1, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// A short exact sequence does not match any of the supported inference
// rule shapes and must be handled by the dedicated case analysis.
struct UnsupportedSequenceError : Error {
    using Error::Error;
};

// An internal cross-check that can never fail on correct inputs fired.
struct InternalConsistencyError : Error {
    using Error::Error;
};

// The request is outside the supported range (homotopy degree > 2,
// group order above the enumeration bound).
struct OutOfScopeError : Error {
    using Error::Error;
};

}  // namespace sopq
