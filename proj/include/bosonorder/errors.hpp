#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bosonorder {

/// Errors caused by the caller's input or by a documented precondition
/// (divergent series, singular systems, ...). The CLI maps these to exit 2.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A normal form whose terms do not share a single excess.
class MixedExcessError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A homogeneous polynomial with more annihilators than creators.
class NegativeExcessError : public DomainError {
public:
    using DomainError::DomainError;
};

class OutOfRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A truncated series failed to meet its stopping criterion within the
/// iteration cap.
class NoConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The requested series evaluation violates its convergence condition.
class DivergenceConditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The linear system behind a Pade approximant is singular (degenerate
/// entry of the Pade table).
class SingularSystemError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation point too close to a pole of a rational approximant.
class PoleProximityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A floating-point quantity left the representable range.
class FloatOverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed expression text. Carries the byte offset of the failure and a
/// description of what would have been accepted there.
class SyntaxError : public DomainError {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : DomainError("syntax error at offset " + std::to_string(position) +
                      ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Breach of an internal invariant; always a bug, never a user error.
/// The CLI maps these to exit 70.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exact division that must be integral left a remainder.
class NonIntegerResultError : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace bosonorder
