#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bbs/rational.hpp"

namespace bbs {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

struct Echelon {
  RatMatrix rows;           // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(RatMatrix m);
int rank(RatMatrix m);

/// Solves A X = B for square A by fraction-free elimination. Returns
/// nullopt when A is singular.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

/// Sparse row echelon form built one row at a time.
class IncrementalEchelon {
 public:
  using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

  /// Reduces `row` against the stored rows; keeps it and returns true iff
  /// it is independent of them.
  bool add(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, SparseRow> rows_;  // keyed by pivot column, pivot entry 1
};

/// Linear inequality a . w >= b.
struct Inequality {
  RatVector a;
  Rational b;
};

/// A rational point satisfying every inequality, found by Fourier-Motzkin
/// elimination and back substitution. nullopt when infeasible.
std::optional<RatVector> fourier_motzkin(const std::vector<Inequality>& system, int num_vars);

}  // namespace bbs
