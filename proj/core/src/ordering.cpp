#include "bbs/ordering.hpp"
#include "bbs/term.hpp"

#include <charconv>

#include "bbs/error.hpp"

namespace bbs {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw Error(ErrorCode::InvalidArgument, "empty weight vector");
  for (int w : w_) {
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "weights must be positive integers");
  }
}

int WeightVector::degree(std::span<const int> exps) const {
  if (exps.size() != w_.size()) {
    throw Error(ErrorCode::InvalidArgument, "weight vector length does not match the number of variables");
  }
  int d = 0;
  for (std::size_t k = 0; k < exps.size(); ++k) d += w_[k] * exps[k];
  return d;
}

int TermOrdering::compare(std::span<const int> a, std::span<const int> b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      }
      return 0;
    case Kind::DegLex: {
      int da = 0;
      int db = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        da += a[k];
        db += b[k];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      }
      return 0;
    }
    case Kind::DegRevLex:
      return degrevlex_compare(a, b);
    case Kind::WeightedDegRevLex: {
      int da = 0;
      int db = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        da += weights_[k] * a[k];
        db += weights_[k] * b[k];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

TermOrdering TermOrdering::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "deglex") return deglex();
  if (text == "degrevlex") return degrevlex();
  if (text.size() > 2 && (text.substr(0, 2) == "W:" || text.substr(0, 2) == "w:")) {
    std::vector<int> w;
    std::string_view rest = text.substr(2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw Error(ErrorCode::Syntax, "bad weight '" + std::string(item) + "'");
      }
      w.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return weighted(WeightVector(std::move(w)));
  }
  throw Error(ErrorCode::Syntax, "unknown term ordering '" + std::string(text) + "'");
}

std::string TermOrdering::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegLex: return "deglex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::WeightedDegRevLex: {
      std::string s = "W:";
      for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(weights_[k]);
      }
      return s;
    }
  }
  return "";
}

}  // namespace bbs
