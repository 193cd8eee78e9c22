#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbs/border_basis.hpp"
#include "bbs/parser.hpp"

namespace bbs::cli {

// A problem file is a list of ';'-terminated clauses, '#' starts a comment:
//
//   ring x, y;                     # mandatory and first
//   deform z;                      # name of the deformation variable
//   weights 1 1;
//   orderideal 1, x, y, xy;
//   ideal x^2 - x*y, y^2 - x*y;
//   prebasis [a11, ..., a1nu; ...; amu1, ..., amunu];   # or g1, g2, ...
//   point c2_2 = 1, c2_4 = -1/2;   # a point on an affine cell
struct ProblemFile {
  ContextPtr ring;
  std::optional<WeightVector> weights;
  std::optional<OrderIdeal> order_ideal;
  std::optional<std::vector<Polynomial>> ideal;
  std::optional<BorderPrebasis> prebasis;
  std::vector<std::pair<std::string, Rational>> point;
  bool has_point = false;
};

/// Throws ParseError with file positions, or Error for semantic problems
/// (unknown variables, a prebasis without an order ideal).
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

}  // namespace bbs::cli
