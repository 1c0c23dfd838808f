#pragma once

#include <stdexcept>
#include <string>

namespace incid4 {

enum class ErrorCode {
  InvalidArgument = 1,
  ZeroPolynomial,
  IdenticalLines,
  RangeTooSmall,
  RejectionBudgetExceeded,
  ParseError,
  InvariantViolation,
  SearchBudgetExceeded,
  LineInZeroSet,
  FlatInZeroSet,
  TooLarge,
  DomainError,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, what + " (line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace incid4
