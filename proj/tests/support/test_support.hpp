#pragma once

#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bbs/border_basis.hpp"
#include "bbs/parser.hpp"
#include "bbs/scheme.hpp"

namespace bbs {

// gtest printers, found by ADL.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace bbs

namespace bbs::testing {

inline ContextPtr ring(std::vector<std::string> vars, std::optional<std::string> deform = std::nullopt) {
  return VariableContext::make(std::move(vars), {}, deform);
}

inline Polynomial P(const ContextPtr& ctx, const std::string& text) { return parse_polynomial(text, ctx); }

inline std::vector<Polynomial> Ps(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ctx, t));
  return out;
}

inline Term T(const ContextPtr& ctx, const std::string& text) { return parse_term(text, ctx); }

inline std::vector<Term> Ts(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<Term> out;
  for (const auto& t : texts) out.push_back(T(ctx, t));
  return out;
}

inline OrderIdeal O(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  return OrderIdeal::from_terms(Ts(ctx, texts));
}

inline std::string fixture(const std::string& name) { return std::string(BBS_FIXTURE_DIR) + "/" + name; }

// Sets of polynomials compared up to sign.
inline std::set<Polynomial, PolynomialLess> up_to_sign(const std::vector<Polynomial>& ps) {
  std::set<Polynomial, PolynomialLess> out;
  for (const auto& p : ps) {
    if (!p.is_zero()) out.insert(sign_normalized(p));
  }
  return out;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
  Rational rational(int range = 5, int max_den = 3) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int range = 5, int max_den = 3) {
    Rational q;
    do {
      q = rational(range, max_den);
    } while (q == 0);
    return q;
  }

  // Random polynomial over all variables of ctx (main, params, deform).
  Polynomial polynomial(const ContextPtr& ctx, int max_terms = 4, int max_exp = 2) {
    std::vector<PolyTerm> terms;
    int count = integer(0, max_terms);
    for (int t = 0; t < count; ++t) {
      Monomial m = Monomial::one(*ctx);
      for (int k = 0; k < ctx->num_main(); ++k) m.set_exponent({VarKind::Main, k}, integer(0, max_exp));
      for (int k = 0; k < ctx->num_params(); ++k) {
        if (coin(0.3)) m.set_exponent({VarKind::Param, k}, integer(0, max_exp));
      }
      if (ctx->has_deform() && coin(0.3)) m.set_exponent({VarKind::Deform, 0}, integer(0, max_exp));
      terms.push_back({m, rational()});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  }

  // Random order ideal in n variables: the divisor closure of a few terms.
  OrderIdeal order_ideal(int n, int generators, int max_degree) {
    std::set<std::vector<int>> seen;
    std::vector<Term> terms;
    std::vector<Term> stack;
    stack.push_back(Term::one(n));
    for (int g = 0; g < generators; ++g) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      int d = integer(0, max_degree);
      for (int s = 0; s < d; ++s) ++e[static_cast<std::size_t>(integer(0, n - 1))];
      stack.push_back(Term(e));
    }
    while (!stack.empty()) {
      Term t = stack.back();
      stack.pop_back();
      if (!seen.insert(t.exponents()).second) continue;
      terms.push_back(t);
      for (int k = 0; k < n; ++k) {
        if (t[k] > 0) stack.push_back(t.divided_by_var(k));
      }
    }
    return OrderIdeal::from_terms(terms);
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

// Generators of the vanishing ideal of points with pairwise distinct first
// coordinates: prod (x_1 - a_i) and x_k - L_k(x_1) with L_k interpolating.
inline std::vector<Polynomial> point_ideal(const ContextPtr& ctx, const std::vector<std::vector<Rational>>& points) {
  const int n = ctx->num_main();
  Polynomial x = Polynomial::variable(ctx, VarRef{VarKind::Main, 0});
  Polynomial f = Polynomial::constant(ctx, 1);
  for (const auto& p : points) f *= x - Polynomial::constant(ctx, p[0]);
  std::vector<Polynomial> gens{f};
  for (int k = 1; k < n; ++k) {
    Polynomial l(ctx);
    for (std::size_t i = 0; i < points.size(); ++i) {
      Polynomial basis = Polynomial::constant(ctx, points[i][static_cast<std::size_t>(k)]);
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        Rational den = points[i][0] - points[j][0];
        basis *= (x - Polynomial::constant(ctx, points[j][0])).scaled(Rational(1) / den);
      }
      l += basis;
    }
    gens.push_back(Polynomial::variable(ctx, VarRef{VarKind::Main, k}) - l);
  }
  return gens;
}

// mu random points with distinct first coordinates.
inline std::vector<std::vector<Rational>> random_points(Rng& rng, int n, int mu) {
  std::vector<std::vector<Rational>> pts;
  std::set<Rational> firsts;
  while (static_cast<int>(pts.size()) < mu) {
    std::vector<Rational> p;
    for (int k = 0; k < n; ++k) p.push_back(rng.rational(6, 2));
    if (!firsts.insert(p[0]).second) continue;
    pts.push_back(p);
  }
  return pts;
}

// The point of parameter space given by a constant prebasis.
inline std::map<VarRef, Rational> coordinates(const GenericPrebasis& g, const BorderPrebasis& b) {
  std::map<VarRef, Rational> point;
  for (int i = 0; i < b.mu(); ++i) {
    for (int j = 0; j < b.nu(); ++j) point[g.parameter(i, j)] = b.coeff(i, j).constant_term();
  }
  return point;
}

inline Polynomial evaluate(const Polynomial& f, const std::map<VarRef, Rational>& point) {
  std::map<VarRef, Polynomial> assignment;
  for (const auto& [v, q] : point) assignment[v] = Polynomial::constant(f.context(), q);
  return substitute(f, assignment);
}

}  // namespace bbs::testing
