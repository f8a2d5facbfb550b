#pragma once

#include <stdexcept>

namespace rwl {

/// Invalid input for the requested topology: bad spec parameters,
/// out-of-range coordinates or labels.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Address or label outside the symplectic node set (odd label).
class InadmissibleNodeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request exceeds an enumeration budget or the exact 64-bit integer range.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first search failed to reach every node. This would falsify the
/// lattice construction and must never fire for a valid spec.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rwl
