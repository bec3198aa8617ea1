#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmt {

// Error categories. They map one-to-one onto the status codes of the C API.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  MalformedFace,
  FaceNotFound,
  QuotientUnsafe,
  LinkConditionViolated,
  SizeLimitExceeded,
  Consistency,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what, ErrorCode code = ErrorCode::Parse)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dmt
