#pragma once

#include <stdexcept>
#include <string>

namespace hexiso {

// Argument outside an operation's contract (bad radius, d1 == d2, negative count, ...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two vertices that are not joined by a grid edge.
struct InvalidEdge : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// Vertex set not contained in the region it is measured against.
struct ContainmentError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct EmptySetError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// Operation-specific precondition on the input set does not hold
// (row is not bad, set still has bad rows, ...).
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Real argument outside the validity window of a scalar function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Enumeration request exceeding the hard size limits.
struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonTerminationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hexiso
