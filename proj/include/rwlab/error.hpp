#pragma once

#include <stdexcept>
#include <string>

namespace rwlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: self-loops, out-of-range endpoints, disconnected input.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Invalid walk or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Record text that does not follow the record grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation refused to run because it would exceed a size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace rwlab
