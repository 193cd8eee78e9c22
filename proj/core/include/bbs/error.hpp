#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbs {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  ContextMismatch,
  InvalidArgument,
  MissingVariable,
  ZeroPolynomial,
  NotAnOrderIdeal,
  NotZeroDimensional,
  DimensionMismatch,
  NotABasis,
  Infeasible,
  BorderTermNotInDegreeForm,
  NotFlat,
  NotHomogeneous,
  NoMaxdegBorder,
  ResidualNonEmpty,
  IdentityFailed,
  Precondition,
};

std::string_view error_name(ErrorCode code);

// Errors that encode a mathematical answer ("this ideal has no O-border
// basis") rather than misuse of the library. The CLI maps these to exit 1.
bool is_mathematical_negative(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bbs
