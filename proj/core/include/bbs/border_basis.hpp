#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bbs/groebner.hpp"
#include "bbs/order_ideal.hpp"
#include "bbs/poly_matrix.hpp"

namespace bbs {

enum class CoefficientDomain { Constant, Deform, Params, Mixed };

/// g_j = b_j - sum_i a_ij t_i for j = 1..nu. The coefficient matrix is
/// mu x nu; entries may involve parameters and the deformation variable
/// but no main variable.
class BorderPrebasis {
 public:
  BorderPrebasis() = default;
  BorderPrebasis(OrderIdeal o, PolyMatrix coeffs);
  /// All a_ij = 0.
  static BorderPrebasis border_terms(OrderIdeal o, ContextPtr ctx);
  /// Reads each g_j off a polynomial with exactly one support term outside
  /// O, which must be a border term with coefficient 1. Any order.
  static BorderPrebasis from_polynomials(OrderIdeal o, const std::vector<Polynomial>& gens);

  const OrderIdeal& order_ideal() const { return o_; }
  const PolyMatrix& coefficients() const { return a_; }
  const ContextPtr& context() const { return a_.context(); }
  const Polynomial& coeff(int i, int j) const { return a_.at(i, j); }
  int mu() const { return o_.mu(); }
  int nu() const { return o_.nu(); }

  Polynomial polynomial(int j) const;
  std::vector<Polynomial> polynomials() const;
  CoefficientDomain domain() const;

  BorderPrebasis map_coefficients(const std::function<Polynomial(const Polynomial&)>& f) const;

  bool operator==(const BorderPrebasis& other) const { return o_ == other.o_ && a_ == other.a_; }

 private:
  OrderIdeal o_;
  PolyMatrix a_;
};

using MatrixSet = std::vector<PolyMatrix>;

/// Column s of A_k is e_r if x_k t_s = t_r, the coefficient column of g_j
/// if x_k t_s = b_j.
MatrixSet multiplication_matrices(const BorderPrebasis& g);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Border division: repeatedly removes a support term of maximal O-index
/// (degrevlex-largest on ties) as t' b_j with smallest j.
DivisionResult border_divide(const Polynomial& f, const BorderPrebasis& g);

struct CommutatorEntry {
  int k = 0;
  int l = 0;
  int row = 0;
  int col = 0;
  Polynomial value;
};

struct CommutingVerdict {
  bool commuting = true;
  std::optional<CommutatorEntry> witness;  // first nonzero entry, pairs k < l, row-major
  explicit operator bool() const { return commuting; }
};

CommutingVerdict commuting_check(const MatrixSet& matrices);
CommutingVerdict is_border_basis(const BorderPrebasis& g);

/// Independent test: every neighbor syzygy lifts, i.e. border division of
/// each neighbor S-polynomial leaves remainder zero.
bool is_border_basis_by_division(const BorderPrebasis& g);

/// The O-border basis of (gens), via a sigma-Groebner basis and a change of
/// basis from O_sigma(I) to O. Throws NotZeroDimensional, DimensionMismatch,
/// NotABasis.
BorderPrebasis border_basis_of_ideal(const std::vector<Polynomial>& gens, const OrderIdeal& o,
                                     const TermOrdering& sigma);

WeightVector find_weight_vector(const BorderPrebasis& g);

}  // namespace bbs
