#pragma once

#include <stdexcept>
#include <string>

namespace chiralsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct BadAxisError : Error {
  using Error::Error;
};

struct BadDimensionError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct BadStateError : Error {
  using Error::Error;
};

struct NotNormalizedError : Error {
  using Error::Error;
};

struct NotRotationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace chiralsim
