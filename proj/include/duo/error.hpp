#pragma once

#include <stdexcept>
#include <string>

namespace duo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when 1-cells are composed or 2-cells pasted along mismatched boundaries.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check disagreed; always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace duo
