#pragma once

#include <stdexcept>
#include <string>

namespace qquery {

/// Bad argument: wrong length, index out of range, malformed parameter.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The quantity is mathematically undefined for this input (e.g. Gamma of a
/// constant profile).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation refuses an input outside its declared size or gate-set cap.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit or file failed structural validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition that should have been established by an earlier check does
/// not hold (e.g. a circuit claimed to be zero-error is not).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_capability(bool ok, const std::string& op, int n, int cap) {
  if (!ok) {
    throw CapabilityError(op + ": n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
  }
}

}  // namespace qquery
