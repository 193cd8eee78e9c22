#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bbs/context.hpp"

namespace bbs {

/// A power product x_1^a_1 ... x_n^a_n over the main variables.
class Term {
 public:
  Term() = default;
  explicit Term(int n) : exps_(static_cast<std::size_t>(n), 0) {}
  explicit Term(std::vector<int> exps);

  static Term one(int n) { return Term(n); }
  static Term variable(int n, int k);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& exponents() const { return exps_; }
  std::span<const int> span() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Term& other) const;
  /// x_k * this
  Term times_var(int k) const;
  /// this / x_k; requires x_k | this.
  Term divided_by_var(int k) const;
  Term operator*(const Term& other) const;
  /// this / other; requires other | this.
  Term operator/(const Term& other) const;
  Term lcm(const Term& other) const;

  bool operator==(const Term&) const = default;

 private:
  std::vector<int> exps_;
};

/// Degree-reverse-lexicographic comparison with x_1 > x_2 > ... > x_n.
/// Returns <0, 0, >0.
int degrevlex_compare(std::span<const int> a, std::span<const int> b);

/// Canonical ascending order used for order ideals and borders.
struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return degrevlex_compare(a.span(), b.span()) < 0;
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

/// "1", "x", "x^2*y".
std::string to_string(const Term& t, const VariableContext& ctx);

}  // namespace bbs
