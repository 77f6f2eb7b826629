#pragma once

#include <stdexcept>
#include <string>

namespace h2df {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimePowerError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct FieldMismatchError : Error {
  using Error::Error;
};

struct InvalidParamsError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct MissingVictimError : Error {
  using Error::Error;
};

struct InvalidAssignmentError : Error {
  using Error::Error;
};

struct InconsistentError : Error {
  using Error::Error;
};

struct ConstraintViolationError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace h2df
