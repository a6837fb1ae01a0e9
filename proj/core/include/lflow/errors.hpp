#pragma once

#include <stdexcept>
#include <string>

namespace lflow {

/// Base of every error raised by the library.
class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A slope was evaluated outside [-1 + margin, 1 - margin].
class DomainViolation : public FlowError {
 public:
  using FlowError::FlowError;
};

/// A flux value lies outside the attainable range of v.
class RangeViolation : public FlowError {
 public:
  using FlowError::FlowError;
};

/// The discrete graph lost the spacelike property (|slope| > 1 - margin).
class SpacelikeViolation : public FlowError {
 public:
  using FlowError::FlowError;
};

/// Zero pivot in a tridiagonal solve.
class SingularSystem : public FlowError {
 public:
  using FlowError::FlowError;
};

/// Non-finite values or other breakdown of the time integration.
class NumericalFailure : public FlowError {
 public:
  using FlowError::FlowError;
};

class ValidationError : public FlowError {
 public:
  using FlowError::FlowError;
};

class ParseError : public FlowError {
 public:
  using FlowError::FlowError;
};

class GridMismatch : public FlowError {
 public:
  using FlowError::FlowError;
};

class InsufficientData : public FlowError {
 public:
  using FlowError::FlowError;
};

}  // namespace lflow
