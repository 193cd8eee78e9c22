#include "bbs/error.hpp"

namespace bbs {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAnOrderIdeal: return "NotAnOrderIdeal";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BorderTermNotInDegreeForm: return "BorderTermNotInDegreeForm";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NoMaxdegBorder: return "NoMaxdegBorder";
    case ErrorCode::ResidualNonEmpty: return "ResidualNonEmpty";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::Precondition: return "PreconditionViolated";
  }
  return "Error";
}

bool is_mathematical_negative(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotABasis:
    case ErrorCode::Infeasible:
    case ErrorCode::BorderTermNotInDegreeForm:
    case ErrorCode::NotFlat:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::NoMaxdegBorder:
    case ErrorCode::ResidualNonEmpty:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::Syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace bbs
