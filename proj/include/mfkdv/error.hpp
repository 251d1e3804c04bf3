#pragma once

#include <stdexcept>
#include <string>

namespace mfkdv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters, malformed configuration or input files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (non-finite values, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mfkdv
