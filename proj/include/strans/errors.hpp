#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace strans {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedMachine : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Monoid saturation passed its element cap (or, in exact flow arithmetic,
/// a coefficient left the representable range).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotBounded : public Error {
 public:
  using Error::Error;
};

class NotOneBounded : public Error {
 public:
  using Error::Error;
};

class NotCopyless : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class StateCapExceeded : public Error {
 public:
  using Error::Error;
};

class CounterOverflow : public Error {
 public:
  using Error::Error;
};

class NoRun : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "validation failed";
    for (const auto& s : v) out += "; " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace strans
