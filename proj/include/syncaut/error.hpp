#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace syncaut {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton document. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message, const std::string& source = {})
      : Error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Two automata that must share an alphabet do not.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A search or construction outgrew its configured size limit.
/// `required()` is a lower bound on what the operation would have needed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap, std::uint64_t required)
      : Error(what + ": cap " + std::to_string(cap) + " exceeded (requires at least " +
              std::to_string(required) + ")"),
        cap_(cap),
        required_(required) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t cap_;
  std::uint64_t required_;
};

}  // namespace syncaut
