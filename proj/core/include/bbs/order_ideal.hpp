#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bbs/ordering.hpp"
#include "bbs/polynomial.hpp"
#include "bbs/term.hpp"

namespace bbs {

bool is_order_ideal(const std::vector<Term>& terms);

/// A finite divisor-closed set of terms t_1 < ... < t_mu (degrevlex, so
/// t_1 = 1) together with its border b_1 < ... < b_nu.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  /// Throws NotAnOrderIdeal.
  static OrderIdeal from_terms(std::vector<Term> terms);
  /// All terms of degree <= d in n variables.
  static OrderIdeal up_to_degree(int n, int d);

  int num_vars() const { return n_; }
  int mu() const { return static_cast<int>(terms_.size()); }
  int nu() const { return static_cast<int>(border_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<Term>& border() const { return border_; }
  const Term& term(int i) const { return terms_[static_cast<std::size_t>(i)]; }
  const Term& border_term(int j) const { return border_[static_cast<std::size_t>(j)]; }

  bool contains(const Term& t) const { return index_.count(t) != 0; }
  std::optional<int> index_of(const Term& t) const;
  std::optional<int> border_index_of(const Term& t) const;

  bool operator==(const OrderIdeal& other) const { return terms_ == other.terms_; }

 private:
  int n_ = 0;
  std::vector<Term> terms_;
  std::vector<Term> border_;
  std::unordered_map<Term, int, TermHash> index_;
  std::unordered_map<Term, int, TermHash> border_index_;
};

/// Terms one multiplication step outside `terms`, sorted canonically.
std::vector<Term> border_of(int n, const std::vector<Term>& terms);

/// The i-th higher border, sorted canonically; i = 0 gives O.
std::vector<Term> higher_border(const OrderIdeal& o, int i);

int o_index(const OrderIdeal& o, const Term& t);

/// Part of f supported on terms of maximal O-index. Throws ZeroPolynomial,
/// InvalidArgument when f involves non-main variables.
Polynomial border_form(const Polynomial& f, const OrderIdeal& o);

struct WebEdge {
  enum class Kind { NextDoor, AcrossStreet };
  Kind kind = Kind::NextDoor;
  // NextDoor: b_i = x_k b_j (l = -1).
  // AcrossStreet: x_k b_i = x_l b_j with i < j.
  int i = 0;
  int j = 0;
  int k = 0;
  int l = -1;
  // AcrossStreet only: u = gcd(b_i, b_j) = b_i / x_l. The edge is across the
  // corner iff u lies in the border; `witness` is then its border index.
  Term common;
  bool corner = false;
  int witness = -1;
};

struct BorderWeb {
  std::vector<Term> vertices;
  std::vector<WebEdge> edges;

  int count(WebEdge::Kind kind) const;
  int corner_count() const;
};

BorderWeb border_web(const OrderIdeal& o);

bool has_maxdeg_border(const OrderIdeal& o, const WeightVector& w);

/// d = max W-degree on O; r, s = number of terms of degree d in O and in
/// the border.
struct MaxdegCounts {
  bool maxdeg = false;
  int d = 0;
  int r = 0;
  int s = 0;
};
MaxdegCounts maxdeg_counts(const OrderIdeal& o, const WeightVector& w);

}  // namespace bbs
