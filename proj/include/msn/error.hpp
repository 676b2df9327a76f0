#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace msn {

/// Base class for every error raised by the library.
///
/// Errors raised while reading a text stream carry the 1-based line number
/// of the offending record; `what()` includes it once it is attached.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message)
      : std::runtime_error(message), message_(message), full_(message) {}

  const char* what() const noexcept override { return full_.c_str(); }

  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  void set_line(std::size_t line) {
    line_ = line;
    full_ = "line " + std::to_string(line) + ": " + message_;
  }

 private:
  std::string message_;
  std::string full_;
  std::optional<std::size_t> line_;
};

class LoopRejected : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

class UnknownLayer : public Error {
 public:
  using Error::Error;
};

class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised when a centrality denominator would be zero (fewer than two nodes).
class DegenerateNetwork : public Error {
 public:
  using Error::Error;
};

/// Malformed input record.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Failure to open, read or write a file or stream.
class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace msn
