#pragma once

#include <stdexcept>
#include <string>

namespace multischur {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that violate an operation's preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical scheme that did not reach its tolerance within its caps.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace multischur
