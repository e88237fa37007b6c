#pragma once

#include <stdexcept>
#include <string>

namespace ideal24 {

enum class ErrorCode {
  NonFacetImage,
  InvalidIsometry,
  DoublePairing,
  SeedDoesNotExtend,
  ColorScopeEmpty,
  HasBoundary,
  AlreadyOrientable,
  NoBoundary,
  NotBoundaryPreserving,
  NonFlatBoundary,
  UnclassifiedFlatType,
  UnclassifiedCompactType,
  BoundarySquareNonzero,
  InvalidArgument,
  Parse,
};

const char* error_code_name(ErrorCode code);

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public EngineError {
 public:
  ParseError(int line, int column, const std::string& what)
      : EngineError(ErrorCode::Parse,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ideal24
