#pragma once

#include <memory>
#include <vector>

#include "bbs/order_ideal.hpp"
#include "bbs/ordering.hpp"
#include "bbs/polynomial.hpp"

namespace bbs {

/// Block order on monomials of a context: main variables under `main`,
/// then parameters under `params`, then the deformation exponent.
struct MonomialOrder {
  TermOrdering main = TermOrdering::degrevlex();
  TermOrdering params = TermOrdering::degrevlex();

  static MonomialOrder of(const TermOrdering& main) { return {main, TermOrdering::degrevlex()}; }
  int compare(const Monomial& a, const Monomial& b) const;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

namespace detail {
struct Engine;
}

class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  /// Monic, interreduced, sorted by increasing leading monomial.
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading() const { return leading_; }
  bool is_unit() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, const MonomialOrder&, const ContextPtr&);
  friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);

  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  std::shared_ptr<const detail::Engine> engine_;
};

struct BuchbergerStats {
  long pairs_total = 0;
  long pairs_reduced = 0;
  long zero_reductions = 0;
};

/// Reduced Groebner basis. `ctx` is only needed when gens is empty.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const ContextPtr& ctx = nullptr);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrdering& sigma,
                         const ContextPtr& ctx = nullptr);
const BuchbergerStats& last_buchberger_stats();

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// O_sigma(I) for a basis in the main variables. Throws NotZeroDimensional.
OrderIdeal quotient_basis(const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const MonomialOrder& order);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

/// Remainder of multivariate division by the list, which need not be a
/// Groebner basis. Zero proves membership; nonzero proves nothing.
Polynomial division_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);
/// Mutual normal forms against both reduced bases.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const MonomialOrder& order);

/// Krull dimension of Q[vars]/I, read off the leading monomials: the size
/// of a largest subset of `vars` containing the support of no leading
/// monomial.
int krull_dimension(const GroebnerBasis& gb, const std::vector<VarRef>& vars);
/// Same, over every variable of the context.
int krull_dimension(const GroebnerBasis& gb);

/// Positive integer weights with <W, b_j - t> >= 1 for all t in
/// Supp(g_j) \ {b_j}. Throws Infeasible.
WeightVector find_weight_vector(const std::vector<Polynomial>& polys, const std::vector<Term>& leading);

}  // namespace bbs
