#pragma once

#include <stdexcept>
#include <string>

namespace symdom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid structure constants, type parameters, or a pole in a coefficient.
struct ParameterError : Error {
  using Error::Error;
};

// Operation requires a concrete polynomial model (ball or matrix triple).
struct ModelError : Error {
  using Error::Error;
};

// Non-integrable exponent, point outside the ordered cell, or a broken rule.
struct QuadratureError : Error {
  using Error::Error;
};

// Degree cap too small: truncated result would not meet its tail contract.
struct TruncationError : Error {
  using Error::Error;
};

}  // namespace symdom
