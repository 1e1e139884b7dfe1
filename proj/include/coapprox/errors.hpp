#pragma once

#include <stdexcept>
#include <string>

namespace coapprox {

// Exit-code families used by the command-line tool: validation (2),
// capacity (3), precondition (4). Internal inconsistencies are bugs.

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RankDeficientError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroSubspaceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Threshold requested for a subspace whose zero set is empty.
class EmptyZeroSetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Projection requested for a target without a best coapproximation.
class NoCoapproximationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coapprox
