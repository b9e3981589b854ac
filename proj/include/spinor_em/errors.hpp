#pragma once

#include <stdexcept>
#include <string>

namespace spinor_em {

/// Base class for all library errors. `exit_code` groups errors into the
/// classes surfaced by the CLI (one nonzero code per class).
class Error : public std::runtime_error {
public:
    Error(std::string what, int exit_code)
        : std::runtime_error(std::move(what)), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

// exit code 3: invalid values / domain preconditions
struct ZeroDirection : Error {
    explicit ZeroDirection(const std::string& w = "direction vector is not unit length")
        : Error(w, 3) {}
};
struct InvalidLorentz : Error {
    explicit InvalidLorentz(const std::string& w = "matrix is not complex-orthogonal")
        : Error(w, 3) {}
};
struct NonPositiveMu0 : Error {
    explicit NonPositiveMu0(const std::string& w = "mu0 must be positive") : Error(w, 3) {}
};
struct ZeroWavevector : Error {
    explicit ZeroWavevector(const std::string& w = "operation undefined at k = 0")
        : Error(w, 3) {}
};
struct InvalidGrid : Error {
    explicit InvalidGrid(const std::string& w = "grid must have n >= 4, n even, L > 0")
        : Error(w, 3) {}
};
struct InvalidValue : Error {
    explicit InvalidValue(const std::string& w) : Error(w, 3) {}
};
struct UnknownKey : Error {
    explicit UnknownKey(const std::string& w) : Error(w, 3) {}
};

// exit code 4: shape / dimension mismatches between containers
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& w = "field shapes do not match") : Error(w, 4) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w = "operator/state dimensions do not match")
        : Error(w, 4) {}
};

// exit code 5: physics-level contract violations detected at runtime
struct TransversalityViolation : Error {
    explicit TransversalityViolation(const std::string& w) : Error(w, 5) {}
};
struct CflViolation : Error {
    explicit CflViolation(const std::string& w = "timestep violates the CFL bound")
        : Error(w, 5) {}
};
struct ContinuityViolation : Error {
    explicit ContinuityViolation(const std::string& w = "source violates charge continuity")
        : Error(w, 5) {}
};
struct UnsupportedInput : Error {
    explicit UnsupportedInput(const std::string& w) : Error(w, 5) {}
};
struct ZeroNorm : Error {
    explicit ZeroNorm(const std::string& w = "state vector has zero norm") : Error(w, 5) {}
};

// exit code 6: Fock-space bookkeeping
struct UnknownMode : Error {
    explicit UnknownMode(const std::string& w = "mode/polarization not in basis")
        : Error(w, 6) {}
};
struct EmptyModeSet : Error {
    explicit EmptyModeSet(const std::string& w = "mode set is empty") : Error(w, 6) {}
};

// exit code 2: configuration parsing
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w, 2) {}
};

}  // namespace spinor_em
