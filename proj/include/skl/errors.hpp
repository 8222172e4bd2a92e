#pragma once

#include <stdexcept>
#include <string>

namespace skl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Inversion of a nonzero element failed: some adjoined polynomial was
/// reducible and the element is a zero divisor. Callers retry with a
/// different adjunction or sample.
struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& msg) : Error(msg) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg) : Error(msg) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& msg) : Error(msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& msg) : Error(msg) {}
};

struct NotProjectiveBasis : Error {
    explicit NotProjectiveBasis(const std::string& msg) : Error(msg) {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& msg) : Error(msg) {}
};

struct UnsupportedGroup : Error {
    explicit UnsupportedGroup(const std::string& msg) : Error(msg) {}
};

struct TowerExtensionFailed : Error {
    explicit TowerExtensionFailed(const std::string& msg) : Error(msg) {}
};

struct DegenerateSample : Error {
    explicit DegenerateSample(const std::string& msg) : Error(msg) {}
};

struct DegenerateLine : Error {
    explicit DegenerateLine(const std::string& msg) : Error(msg) {}
};

struct DegenerateSecant : Error {
    explicit DegenerateSecant(const std::string& msg) : Error(msg) {}
};

struct RankDegenerate : Error {
    explicit RankDegenerate(const std::string& msg) : Error(msg) {}
};

struct NotInFamily : Error {
    explicit NotInFamily(const std::string& msg) : Error(msg) {}
};

struct NotOnCurve : Error {
    explicit NotOnCurve(const std::string& msg) : Error(msg) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

struct SpanMismatch : Error {
    explicit SpanMismatch(const std::string& msg) : Error(msg) {}
};

struct NoValidPattern : Error {
    explicit NoValidPattern(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace skl
