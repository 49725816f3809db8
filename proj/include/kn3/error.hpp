#pragma once

#include <stdexcept>
#include <string>

namespace kn3 {

enum class ErrorCode {
  InvalidSpec,
  OddOrder,
  UnsupportedCase,
  VertexAbsent,
  MismatchedAmbient,
  PreconditionViolated,
  NotAnEmbeddingSet,
  NotQuadrilateral,
  Disconnected,
  GraphMismatch,
  NoCommonTransition,
  BoundExceeded,
  Parse,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto an exit status without string matching.
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
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace kn3
