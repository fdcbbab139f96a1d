#pragma once

#include <stdexcept>
#include <string>

namespace clusterbench {

/// Raised when a mathematically meaningful precondition fails (frozen
/// mutation, division by zero, non-reduced word, ...). The CLI maps these to
/// exit code 1 and the service to a 4xx status.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FrozenVertexError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PhaseOrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

class StarfishHypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace clusterbench
