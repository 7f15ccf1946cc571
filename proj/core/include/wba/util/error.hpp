#pragma once

#include <stdexcept>
#include <string>

namespace wba {

/// Base class for every error raised by the library. Messages are meant for
/// end users of the CLI, so they name the offending value.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An irrep label that has multiplicity zero at the working dimension.
class NotRepresentedError : public Error {
 public:
  using Error::Error;
};

/// A dense realization would exceed the configured d^n guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace wba
