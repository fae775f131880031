#pragma once

#include <stdexcept>
#include <string>

namespace sublat {

/// Input is outside the mathematical domain of an operation
/// (ring mismatch, whole module passed to a proper-only predicate, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size bound (order cap, lattice cap, factorization cap) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed descriptor, unknown theorem id, bad command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-check failed; always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sublat
