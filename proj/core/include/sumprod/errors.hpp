#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

/// Root of every error thrown by the library. The CLI maps subclasses onto
/// exit codes: StochasticFailure exits 2, everything else exits 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input object (non-injective labeling, improper colouring, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a search-space guard, or a construction came up short.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a theorem-level construction is not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Geometric degeneracy (singular curve, point with no preimage, ...).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A randomized search exhausted its attempt budget.
class StochasticFailure : public Error {
 public:
  StochasticFailure(const std::string& what, std::size_t attempts)
      : Error(what), attempts_(attempts) {}
  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

/// A post-condition that should hold unconditionally failed to verify.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumprod
