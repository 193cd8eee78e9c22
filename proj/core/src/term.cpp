#include "bbs/term.hpp"

#include <algorithm>
#include <numeric>

#include "bbs/error.hpp"

namespace bbs {

Term::Term(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in term");
  }
}

Term Term::variable(int n, int k) {
  Term t(n);
  t.exps_[static_cast<std::size_t>(k)] = 1;
  return t;
}

int Term::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Term::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Term::divides(const Term& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

Term Term::times_var(int k) const {
  Term t = *this;
  ++t.exps_[static_cast<std::size_t>(k)];
  return t;
}

Term Term::divided_by_var(int k) const {
  Term t = *this;
  if (--t.exps_[static_cast<std::size_t>(k)] < 0) {
    throw Error(ErrorCode::InvalidArgument, "variable does not divide term");
  }
  return t;
}

Term Term::operator*(const Term& other) const {
  Term t = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) t.exps_[k] += other.exps_[k];
  return t;
}

Term Term::operator/(const Term& other) const {
  Term t = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    t.exps_[k] -= other.exps_[k];
    if (t.exps_[k] < 0) throw Error(ErrorCode::InvalidArgument, "term does not divide");
  }
  return t;
}

Term Term::lcm(const Term& other) const {
  Term t = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) t.exps_[k] = std::max(t.exps_[k], other.exps_[k]);
  return t;
}

int degrevlex_compare(std::span<const int> a, std::span<const int> b) {
  int da = 0;
  int db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  }
  return 0;
}

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int e : t.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

std::string to_string(const Term& t, const VariableContext& ctx) {
  std::string out;
  for (int k = 0; k < t.num_vars(); ++k) {
    if (t[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.main_vars()[static_cast<std::size_t>(k)];
    if (t[k] > 1) out += '^' + std::to_string(t[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace bbs
