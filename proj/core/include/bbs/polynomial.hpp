#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bbs/context.hpp"
#include "bbs/rational.hpp"
#include "bbs/term.hpp"

namespace bbs {

/// Exponents of one monomial, laid out as [main | params | deform].
class Monomial {
 public:
  Monomial() = default;
  Monomial(int n_main, int n_params);
  Monomial(const Term& main, std::vector<int> params, int deform);
  static Monomial one(const VariableContext& ctx);
  static Monomial of_term(const VariableContext& ctx, const Term& t);

  int num_main() const { return n_main_; }
  int num_params() const { return n_params_; }

  std::span<const int> main() const { return {e_.data(), static_cast<std::size_t>(n_main_)}; }
  std::span<const int> params() const {
    return {e_.data() + n_main_, static_cast<std::size_t>(n_params_)};
  }
  int deform() const { return e_.back(); }
  int exponent(VarRef v) const;
  void set_exponent(VarRef v, int e);
  const std::vector<int>& raw() const { return e_; }

  Term main_term() const;
  int main_degree() const;
  int param_degree() const;
  bool is_one() const;
  bool has_main() const;
  bool has_params() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
  int n_main_ = 0;
  int n_params_ = 0;
};

/// Canonical order: degrevlex on the main part, then degrevlex on the
/// parameter part, then the deformation exponent.
int canonical_compare(const Monomial& a, const Monomial& b);

struct PolyTerm {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending canonical order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, VarRef v);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial monomial(ContextPtr ctx, const Monomial& m, const Rational& c = 1);
  static Polynomial of_term(ContextPtr ctx, const Term& t, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(ContextPtr ctx, std::vector<PolyTerm> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const PolyTerm& leading() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  int main_degree() const;
  int param_degree() const;
  int deform_degree() const;
  bool uses_main() const;
  bool uses_params() const;
  bool uses_deform() const;
  bool uses(VarRef v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  void require_same(const Polynomial& other) const;

  ContextPtr ctx_;
  std::vector<PolyTerm> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// A strict total order on polynomials of one context, for sets and maps.
struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

/// f or -f, whichever has a positive leading coefficient.
Polynomial sign_normalized(const Polynomial& f);
/// f divided by its leading coefficient.
Polynomial monic(const Polynomial& f);

/// Ring homomorphism sending each assigned variable to its image in
/// `target`; unassigned variables go to the variable of the same name in
/// `target`. A null target means f's own context.
Polynomial substitute(const Polynomial& f, const std::map<VarRef, Polynomial>& assignment,
                      const ContextPtr& target = nullptr);

/// Moves f into `target`, mapping every variable by name.
Polynomial transfer(const Polynomial& f, const ContextPtr& target);

}  // namespace bbs
