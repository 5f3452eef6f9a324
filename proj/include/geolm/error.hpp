#pragma once

#include <stdexcept>
#include <string>

namespace geolm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-range argument or malformed domain value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unparseable text input (tokens, config files, JSONL records).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that decodes to an impossible state.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Tensor shape mismatch; message names the op and both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite value where the math requires a finite one (NaN gradients,
// diverged losses); message carries the offending tensor and position.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace geolm
