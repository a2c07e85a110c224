#pragma once

#include <stdexcept>
#include <string>

namespace exitbound {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input or violated precondition (dimension mismatch, unstable
/// matrix where a stable one is required, malformed system file, ...).
struct ConfigError : Error {
  using Error::Error;
};

/// A numerical routine failed to converge or overflowed.
struct NumericalError : Error {
  using Error::Error;
};

/// A solver solution failed post-validation against the model residuals.
struct CertificateError : Error {
  using Error::Error;
};

/// An internal soundness invariant was violated; always a bug.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace exitbound
