#ifndef MVGOPPA_ERRORS_HPP
#define MVGOPPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvgoppa {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical precondition of an operation was violated (CLI exit code 3).
struct MathError : Error {
    using Error::Error;
};

/// A theorem-level consistency assertion failed. This signals an internal
/// bug, never a property of the inputs (CLI exit code 4).
struct MismatchDetected : Error {
    explicit MismatchDetected(const std::string& msg)
        : Error("theorem assertion mismatch: " + msg) {}
};

/// Malformed user input (CLI exit code 2).
struct SpecError : Error {
    using Error::Error;
};

struct NotPrime : MathError {
    explicit NotPrime(unsigned long long p)
        : MathError("not prime: " + std::to_string(p)) {}
};

struct ReducibleModulus : MathError {
    explicit ReducibleModulus(const std::string& what)
        : MathError("reducible modulus: " + what) {}
};

struct NonPrimitiveModulusRoot : MathError {
    NonPrimitiveModulusRoot()
        : MathError("modulus root is not a primitive element") {}
};

struct FieldMismatch : MathError {
    FieldMismatch() : MathError("operands belong to different fields") {}
};

struct ShapeMismatch : MathError {
    explicit ShapeMismatch(const std::string& what)
        : MathError("shape mismatch: " + what) {}
};

struct BadIndex : MathError {
    explicit BadIndex(const std::string& what) : MathError("bad index: " + what) {}
};

struct BadDimension : MathError {
    explicit BadDimension(const std::string& what)
        : MathError("bad dimension: " + what) {}
};

struct DuplicatePoints : MathError {
    DuplicatePoints() : MathError("evaluation points are not distinct") {}
};

struct BothZero : MathError {
    BothZero() : MathError("operation undefined for two zero polynomials") {}
};

struct DenominatorVanishes : MathError {
    explicit DenominatorVanishes(const std::string& point)
        : MathError("denominator vanishes at point " + point) {}
};

struct GeneratorVanishes : MathError {
    explicit GeneratorVanishes(const std::string& point)
        : MathError("generator polynomial vanishes at point " + point) {}
};

struct ExponentOutOfFootprint : MathError {
    explicit ExponentOutOfFootprint(const std::string& what)
        : MathError("exponent outside the reduced footprint: " + what) {}
};

struct ZeroCode : MathError {
    ZeroCode() : MathError("operation undefined for the zero code") {}
};

struct DegenerateCode : MathError {
    explicit DegenerateCode(const std::string& what)
        : MathError("degenerate code: " + what) {}
};

struct HypothesisViolated : MathError {
    explicit HypothesisViolated(const std::string& what)
        : MathError("theorem hypothesis violated: " + what) {}
};

struct PreconditionViolated : MathError {
    explicit PreconditionViolated(const std::string& what)
        : MathError("precondition violated: " + what) {}
};

struct CertificateInvalid : MathError {
    explicit CertificateInvalid(const std::string& what)
        : MathError("dual-partner certificate invalid: " + what) {}
};

}  // namespace mvgoppa

#endif
