#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bbs {

/// A row of positive integers grading the main variables.
class WeightVector {
 public:
  explicit WeightVector(std::vector<int> weights);
  static WeightVector standard(int n) { return WeightVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int size() const { return static_cast<int>(w_.size()); }
  int operator[](int k) const { return w_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& values() const { return w_; }
  int degree(std::span<const int> exps) const;

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<int> w_;
};

class TermOrdering {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, WeightedDegRevLex };

  static TermOrdering lex() { return TermOrdering(Kind::Lex, {}); }
  static TermOrdering deglex() { return TermOrdering(Kind::DegLex, {}); }
  static TermOrdering degrevlex() { return TermOrdering(Kind::DegRevLex, {}); }
  static TermOrdering weighted(const WeightVector& w) {
    return TermOrdering(Kind::WeightedDegRevLex, w.values());
  }
  /// "lex", "deglex", "degrevlex" or "W:<w1,...,wn>".
  static TermOrdering parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }

  int compare(std::span<const int> a, std::span<const int> b) const;
  std::string to_string() const;

  bool operator==(const TermOrdering&) const = default;

 private:
  TermOrdering(Kind kind, std::vector<int> weights) : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_;
  std::vector<int> weights_;
};

}  // namespace bbs
