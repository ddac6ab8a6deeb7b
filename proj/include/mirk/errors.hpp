#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mirk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatchError : public Error {
 public:
  LengthMismatchError(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class PositionOutOfRangeError : public Error {
 public:
  PositionOutOfRangeError(std::size_t pos, std::size_t limit)
      : Error("position " + std::to_string(pos) + " out of range [1," + std::to_string(limit) + "]") {}
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& context) : Error("integer overflow in " + context) {}
};

class InstanceTooLargeError : public Error {
 public:
  InstanceTooLargeError(const std::string& what, std::uint64_t value, std::uint64_t cap)
      : Error(what + " = " + std::to_string(value) + " exceeds cap " + std::to_string(cap)) {}
};

/// Error in a textual input; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mirk
