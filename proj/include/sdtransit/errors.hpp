#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdtransit {

// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A row or line that cannot be parsed in the declared format.
class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A record parsed fine but violates a domain invariant (negative size,
// score outside [0,1], ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
  InvariantViolation(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason) {}
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NegativeCount : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class FrameDomainMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySeries : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdtransit
