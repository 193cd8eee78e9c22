#include "bbs/border_basis.hpp"

#include <algorithm>
#include <map>

#include "bbs/error.hpp"
#include "bbs/linalg.hpp"
#include "bbs/parallel.hpp"

namespace bbs {

namespace {

void require_no_main(const Polynomial& p) {
  if (p.uses_main()) throw Error(ErrorCode::InvalidArgument, "prebasis coefficient involves a main variable");
}

// Splits f into (main term, coefficient polynomial) pairs.
std::map<std::vector<int>, Polynomial> by_main_term(const Polynomial& f) {
  std::map<std::vector<int>, std::vector<PolyTerm>> groups;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    std::vector<int> key = m.main_term().exponents();
    for (int k = 0; k < m.num_main(); ++k) m.set_exponent({VarKind::Main, k}, 0);
    groups[key].push_back({std::move(m), t.coeff});
  }
  std::map<std::vector<int>, Polynomial> out;
  for (auto& [k, v] : groups) out.emplace(k, Polynomial::from_terms(f.context(), std::move(v)));
  return out;
}

}  // namespace

BorderPrebasis::BorderPrebasis(OrderIdeal o, PolyMatrix coeffs) : o_(std::move(o)), a_(std::move(coeffs)) {
  if (a_.rows() != o_.mu() || a_.cols() != o_.nu()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient matrix must be mu x nu");
  }
  if (a_.context()->num_main() != o_.num_vars()) {
    throw Error(ErrorCode::ContextMismatch, "order ideal and context disagree on the number of variables");
  }
  for (int i = 0; i < a_.rows(); ++i) {
    for (int j = 0; j < a_.cols(); ++j) require_no_main(a_.at(i, j));
  }
}

BorderPrebasis BorderPrebasis::border_terms(OrderIdeal o, ContextPtr ctx) {
  int mu = o.mu();
  int nu = o.nu();
  return BorderPrebasis(std::move(o), PolyMatrix(std::move(ctx), mu, nu));
}

BorderPrebasis BorderPrebasis::from_polynomials(OrderIdeal o, const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorCode::DimensionMismatch, "no polynomials given");
  ContextPtr ctx = gens.front().context();
  PolyMatrix a(ctx, o.mu(), o.nu());
  std::vector<bool> seen(static_cast<std::size_t>(o.nu()), false);
  for (const auto& g : gens) {
    if (!same_context(g.context(), ctx)) throw Error(ErrorCode::ContextMismatch, "polynomials belong to different contexts");
    std::optional<int> border;
    std::vector<std::pair<int, Polynomial>> inside;
    for (auto& [key, coeff] : by_main_term(g)) {
      Term t(key);
      if (auto i = o.index_of(t)) {
        inside.emplace_back(*i, -coeff);
        continue;
      }
      auto j = o.border_index_of(t);
      if (!j) throw Error(ErrorCode::InvalidArgument, "support term " + to_string(t, *ctx) + " lies outside O and its border");
      if (border) throw Error(ErrorCode::InvalidArgument, "polynomial has more than one border term: " + g.to_string());
      if (!(coeff == Polynomial::constant(ctx, 1))) {
        throw Error(ErrorCode::InvalidArgument, "border term coefficient must be 1: " + g.to_string());
      }
      border = *j;
    }
    if (!border) throw Error(ErrorCode::InvalidArgument, "polynomial has no border term: " + g.to_string());
    if (seen[static_cast<std::size_t>(*border)]) {
      throw Error(ErrorCode::InvalidArgument, "two polynomials share the border term " + to_string(o.border_term(*border), *ctx));
    }
    seen[static_cast<std::size_t>(*border)] = true;
    for (auto& [i, c] : inside) a.at(i, *border) = std::move(c);
  }
  for (int j = 0; j < o.nu(); ++j) {
    if (!seen[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::DimensionMismatch, "no polynomial for border term " + to_string(o.border_term(j), *ctx));
    }
  }
  return BorderPrebasis(std::move(o), std::move(a));
}

Polynomial BorderPrebasis::polynomial(int j) const {
  const ContextPtr& ctx = context();
  std::vector<PolyTerm> terms;
  terms.push_back({Monomial::of_term(*ctx, o_.border_term(j)), 1});
  for (int i = 0; i < mu(); ++i) {
    Monomial ti = Monomial::of_term(*ctx, o_.term(i));
    for (const auto& t : a_.at(i, j).terms()) terms.push_back({t.mono * ti, -t.coeff});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

std::vector<Polynomial> BorderPrebasis::polynomials() const {
  std::vector<Polynomial> out;
  for (int j = 0; j < nu(); ++j) out.push_back(polynomial(j));
  return out;
}

CoefficientDomain BorderPrebasis::domain() const {
  bool params = false;
  bool deform = false;
  for (int i = 0; i < mu(); ++i) {
    for (int j = 0; j < nu(); ++j) {
      params = params || a_.at(i, j).uses_params();
      deform = deform || a_.at(i, j).uses_deform();
    }
  }
  if (params && deform) return CoefficientDomain::Mixed;
  if (params) return CoefficientDomain::Params;
  if (deform) return CoefficientDomain::Deform;
  return CoefficientDomain::Constant;
}

BorderPrebasis BorderPrebasis::map_coefficients(const std::function<Polynomial(const Polynomial&)>& f) const {
  return BorderPrebasis(o_, a_.map(f));
}

MatrixSet multiplication_matrices(const BorderPrebasis& g) {
  const OrderIdeal& o = g.order_ideal();
  const ContextPtr& ctx = g.context();
  MatrixSet out;
  for (int k = 0; k < o.num_vars(); ++k) {
    PolyMatrix a(ctx, o.mu(), o.mu());
    for (int s = 0; s < o.mu(); ++s) {
      Term m = o.term(s).times_var(k);
      if (auto r = o.index_of(m)) {
        a.at(*r, s) = Polynomial::constant(ctx, 1);
      } else {
        int j = *o.border_index_of(m);
        for (int i = 0; i < o.mu(); ++i) a.at(i, s) = g.coeff(i, j);
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

DivisionResult border_divide(const Polynomial& f, const BorderPrebasis& g) {
  const OrderIdeal& o = g.order_ideal();
  const ContextPtr& ctx = g.context();
  if (!same_context(f.context(), ctx)) throw Error(ErrorCode::ContextMismatch, "polynomial and prebasis contexts differ");
  DivisionResult res{std::vector<Polynomial>(static_cast<std::size_t>(o.nu()), Polynomial(ctx)), Polynomial(ctx)};
  Polynomial rest = f;
  while (true) {
    auto parts = by_main_term(rest);
    const std::vector<int>* pick = nullptr;
    int pick_index = 0;
    for (const auto& [key, coeff] : parts) {
      int ind = o_index(o, Term(key));
      if (ind == 0) continue;
      if (!pick || ind > pick_index || (ind == pick_index && degrevlex_compare(key, *pick) > 0)) {
        pick = &key;
        pick_index = ind;
      }
    }
    if (!pick) break;
    Term t(*pick);
    int j = -1;
    for (int jj = 0; jj < o.nu(); ++jj) {
      const Term& b = o.border_term(jj);
      if (b.divides(t) && t.degree() - b.degree() == pick_index - 1) {
        j = jj;
        break;
      }
    }
    if (j < 0) throw Error(ErrorCode::Precondition, "no border factorization of the selected term");
    Monomial shift = Monomial::of_term(*ctx, t / o.border_term(j));
    Polynomial c = parts.at(*pick);
    Polynomial q = c * Polynomial::monomial(ctx, shift);
    res.quotients[static_cast<std::size_t>(j)] += q;
    rest -= q * g.polynomial(j);
  }
  res.remainder = rest;
  return res;
}

CommutingVerdict commuting_check(const MatrixSet& matrices) {
  const int n = static_cast<int>(matrices.size());
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) pairs.emplace_back(k, l);
  }
  std::vector<std::optional<CommutatorEntry>> found(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int p) {
    auto [k, l] = pairs[static_cast<std::size_t>(p)];
    const PolyMatrix& a = matrices[static_cast<std::size_t>(k)];
    const PolyMatrix& b = matrices[static_cast<std::size_t>(l)];
    PolyMatrix c = a * b - b * a;
    for (int r = 0; r < c.rows(); ++r) {
      for (int s = 0; s < c.cols(); ++s) {
        if (!c.at(r, s).is_zero()) {
          found[static_cast<std::size_t>(p)] = CommutatorEntry{k, l, r, s, c.at(r, s)};
          return;
        }
      }
    }
  });
  CommutingVerdict v;
  for (auto& f : found) {
    if (f) {
      v.commuting = false;
      v.witness = std::move(f);
      break;
    }
  }
  return v;
}

CommutingVerdict is_border_basis(const BorderPrebasis& g) { return commuting_check(multiplication_matrices(g)); }

bool is_border_basis_by_division(const BorderPrebasis& g) {
  const OrderIdeal& o = g.order_ideal();
  const ContextPtr& ctx = g.context();
  BorderWeb web = border_web(o);
  for (const auto& e : web.edges) {
    Polynomial s(ctx);
    if (e.kind == WebEdge::Kind::NextDoor) {
      s = g.polynomial(e.i) - Polynomial::variable(ctx, VarRef{VarKind::Main, e.k}) * g.polynomial(e.j);
    } else {
      s = Polynomial::variable(ctx, VarRef{VarKind::Main, e.k}) * g.polynomial(e.i) -
          Polynomial::variable(ctx, VarRef{VarKind::Main, e.l}) * g.polynomial(e.j);
    }
    if (!border_divide(s, g).remainder.is_zero()) return false;
  }
  return true;
}

BorderPrebasis border_basis_of_ideal(const std::vector<Polynomial>& gens, const OrderIdeal& o, const TermOrdering& sigma) {
  if (gens.empty()) throw Error(ErrorCode::NotZeroDimensional, "the zero ideal is not zero-dimensional");
  const ContextPtr& ctx = gens.front().context();
  for (const auto& f : gens) {
    if (f.uses_params() || f.uses_deform()) throw Error(ErrorCode::InvalidArgument, "generators must lie in the main variables");
  }
  if (ctx->num_main() != o.num_vars()) throw Error(ErrorCode::ContextMismatch, "order ideal and ideal disagree on the number of variables");
  GroebnerBasis gb = buchberger(gens, sigma, ctx);
  if (gb.is_unit()) throw Error(ErrorCode::DimensionMismatch, "the ideal is the unit ideal");
  OrderIdeal os = quotient_basis(gb);
  if (os.mu() != o.mu()) {
    throw Error(ErrorCode::DimensionMismatch, "quotient has dimension " + std::to_string(os.mu()) + ", O has " + std::to_string(o.mu()) + " terms");
  }
  const std::size_t mu = static_cast<std::size_t>(o.mu());
  auto coords = [&](const Term& t) {
    RatVector v(mu, Rational(0));
    Polynomial nf = normal_form(Polynomial::of_term(ctx, t), gb);
    for (const auto& term : nf.terms()) v[static_cast<std::size_t>(*os.index_of(term.mono.main_term()))] = term.coeff;
    return v;
  };
  RatMatrix m(mu, RatVector(mu));
  for (std::size_t i = 0; i < mu; ++i) {
    RatVector c = coords(o.term(static_cast<int>(i)));
    for (std::size_t r = 0; r < mu; ++r) m[r][i] = c[r];
  }
  RatMatrix rhs(mu, RatVector(static_cast<std::size_t>(o.nu())));
  for (int j = 0; j < o.nu(); ++j) {
    RatVector c = coords(o.border_term(j));
    for (std::size_t r = 0; r < mu; ++r) rhs[r][static_cast<std::size_t>(j)] = c[r];
  }
  auto x = solve(m, rhs);
  if (!x) throw Error(ErrorCode::NotABasis, "O is not a vector space basis of the quotient");
  PolyMatrix a(ctx, o.mu(), o.nu());
  for (int i = 0; i < o.mu(); ++i) {
    for (int j = 0; j < o.nu(); ++j) a.at(i, j) = Polynomial::constant(ctx, (*x)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return BorderPrebasis(o, std::move(a));
}

WeightVector find_weight_vector(const BorderPrebasis& g) {
  if (g.domain() != CoefficientDomain::Constant) throw Error(ErrorCode::InvalidArgument, "weight search needs constant coefficients");
  return find_weight_vector(g.polynomials(), g.order_ideal().border());
}

}  // namespace bbs
