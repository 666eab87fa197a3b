#pragma once

#include <stdexcept>
#include <string>

namespace torihedra {

enum class ErrorKind {
  Syntax,
  SlotReuse,
  SlotUnused,
  TooFewCrossings,
  Disconnected,
  NonCellular,
  NonAlternating,
  NotReduced,
  NotColorable,
  InvalidTiling,
  UnmatchedVertex,
  NotSemiRegular,
  CensusMismatch,
  UnsupportedCensus,
  MalformedTriangulation,
  DegreeMismatch,
  AngleSum,
  Infeasible,
  NoConvergence,
  Holonomy,
  Degenerate,
  Unsupported,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in a TLD document; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace torihedra
