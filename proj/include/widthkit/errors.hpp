#pragma once

#include <stdexcept>
#include <string>

namespace widthkit {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation left the range of exact 64-bit arithmetic.
struct ArithmeticOverflow : Error {
  using Error::Error;
};

}  // namespace widthkit
