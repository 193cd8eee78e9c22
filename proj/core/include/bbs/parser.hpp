#pragma once

#include <string_view>

#include "bbs/polynomial.hpp"

namespace bbs {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parses the polynomial grammar: signed integer or integer/integer
/// coefficients, declared identifiers, '^' with non-negative integer
/// exponents, optional '*', '+'/'-' and parentheses. An undeclared
/// identifier that splits into declared names ("xy") is their product.
/// Errors carry the
/// line and column, offset by `origin` when the text is a slice of a file.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx,
                            SourcePos origin = {});

/// Parses a single power product with coefficient 1 in the main variables.
Term parse_term(std::string_view text, const ContextPtr& ctx, SourcePos origin = {});

}  // namespace bbs
