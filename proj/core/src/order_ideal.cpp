#include "bbs/order_ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bbs/error.hpp"

namespace bbs {

namespace {

using TermSet = std::unordered_set<Term, TermHash>;

void sort_unique(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(), TermLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool is_order_ideal(const std::vector<Term>& terms) {
  if (terms.empty()) return false;
  int n = terms.front().num_vars();
  TermSet set;
  for (const auto& t : terms) {
    if (t.num_vars() != n) return false;
    set.insert(t);
  }
  // Closed under division by single variables implies closed under all divisors.
  for (const auto& t : terms) {
    for (int k = 0; k < n; ++k) {
      if (t[k] > 0 && set.count(t.divided_by_var(k)) == 0) return false;
    }
  }
  return true;
}

std::vector<Term> border_of(int n, const std::vector<Term>& terms) {
  TermSet set(terms.begin(), terms.end());
  std::vector<Term> out;
  for (const auto& t : terms) {
    for (int k = 0; k < n; ++k) {
      Term m = t.times_var(k);
      if (set.count(m) == 0) out.push_back(std::move(m));
    }
  }
  sort_unique(out);
  return out;
}

OrderIdeal OrderIdeal::from_terms(std::vector<Term> terms) {
  sort_unique(terms);
  if (!is_order_ideal(terms)) throw Error(ErrorCode::NotAnOrderIdeal, "terms are not closed under taking divisors");
  OrderIdeal o;
  o.n_ = terms.front().num_vars();
  o.terms_ = std::move(terms);
  o.border_ = border_of(o.n_, o.terms_);
  for (int i = 0; i < o.mu(); ++i) o.index_.emplace(o.terms_[static_cast<std::size_t>(i)], i);
  for (int j = 0; j < o.nu(); ++j) o.border_index_.emplace(o.border_[static_cast<std::size_t>(j)], j);
  return o;
}

OrderIdeal OrderIdeal::up_to_degree(int n, int d) {
  std::vector<Term> layer{Term::one(n)};
  std::vector<Term> all = layer;
  for (int e = 1; e <= d; ++e) {
    std::vector<Term> next;
    for (const auto& t : layer) {
      for (int k = 0; k < n; ++k) next.push_back(t.times_var(k));
    }
    sort_unique(next);
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return from_terms(std::move(all));
}

std::optional<int> OrderIdeal::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> OrderIdeal::border_index_of(const Term& t) const {
  auto it = border_index_.find(t);
  if (it == border_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Term> higher_border(const OrderIdeal& o, int i) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative border index");
  if (i == 0) return o.terms();
  std::vector<Term> closure = o.terms();
  std::vector<Term> layer;
  for (int step = 1; step <= i; ++step) {
    layer = border_of(o.num_vars(), closure);
    closure.insert(closure.end(), layer.begin(), layer.end());
  }
  return layer;
}

int o_index(const OrderIdeal& o, const Term& t) {
  if (t.num_vars() != o.num_vars()) throw Error(ErrorCode::InvalidArgument, "term has the wrong number of variables");
  if (o.contains(t)) return 0;
  // Expand layer by layer, keeping only divisors of t.
  TermSet seen;
  std::vector<Term> frontier;
  for (const auto& s : o.terms()) {
    if (s.divides(t)) {
      seen.insert(s);
      frontier.push_back(s);
    }
  }
  for (int i = 1;; ++i) {
    std::vector<Term> next;
    for (const auto& s : frontier) {
      for (int k = 0; k < o.num_vars(); ++k) {
        if (s[k] >= t[k]) continue;
        Term m = s.times_var(k);
        if (seen.insert(m).second) next.push_back(std::move(m));
      }
    }
    if (seen.count(t)) return i;
    frontier = std::move(next);
  }
}

Polynomial border_form(const Polynomial& f, const OrderIdeal& o) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no border form");
  if (f.uses_params() || f.uses_deform()) {
    throw Error(ErrorCode::InvalidArgument, "border form needs a polynomial in the main variables");
  }
  std::vector<int> idx;
  idx.reserve(f.size());
  for (const auto& t : f.terms()) idx.push_back(o_index(o, t.mono.main_term()));
  int top = *std::max_element(idx.begin(), idx.end());
  std::vector<PolyTerm> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] == top) out.push_back(f.terms()[k]);
  }
  return Polynomial::from_terms(f.context(), std::move(out));
}

int BorderWeb::count(WebEdge::Kind kind) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [kind](const WebEdge& e) { return e.kind == kind; }));
}

int BorderWeb::corner_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const WebEdge& e) { return e.corner; }));
}

namespace {

// The single variable index v with a = x_v * b, or -1.
int quotient_variable(const Term& a, const Term& b) {
  int v = -1;
  for (int k = 0; k < a.num_vars(); ++k) {
    int d = a[k] - b[k];
    if (d == 0) continue;
    if (d != 1 || v >= 0) return -1;
    v = k;
  }
  return v;
}

}  // namespace

BorderWeb border_web(const OrderIdeal& o) {
  BorderWeb web;
  web.vertices = o.border();
  const int nu = o.nu();
  for (int a = 0; a < nu; ++a) {
    const Term& ba = o.border_term(a);
    for (int b = a + 1; b < nu; ++b) {
      const Term& bb = o.border_term(b);
      if (bb.degree() == ba.degree() + 1) {
        int k = quotient_variable(bb, ba);
        if (k >= 0) {
          WebEdge e;
          e.kind = WebEdge::Kind::NextDoor;
          e.i = b;
          e.j = a;
          e.k = k;
          web.edges.push_back(std::move(e));
        }
      } else if (bb.degree() == ba.degree()) {
        Term l = ba.lcm(bb);
        if (l.degree() != ba.degree() + 1) continue;
        WebEdge e;
        e.kind = WebEdge::Kind::AcrossStreet;
        e.i = a;
        e.j = b;
        e.k = quotient_variable(l, ba);
        e.l = quotient_variable(l, bb);
        e.common = ba.divided_by_var(e.l);
        if (auto w = o.border_index_of(e.common)) {
          e.corner = true;
          e.witness = *w;
        }
        web.edges.push_back(std::move(e));
      }
    }
  }
  return web;
}

MaxdegCounts maxdeg_counts(const OrderIdeal& o, const WeightVector& w) {
  if (w.size() != o.num_vars()) throw Error(ErrorCode::InvalidArgument, "weight vector length does not match the variables");
  MaxdegCounts c;
  for (const auto& t : o.terms()) c.d = std::max(c.d, w.degree(t.span()));
  int min_border = -1;
  for (const auto& b : o.border()) {
    int d = w.degree(b.span());
    if (min_border < 0 || d < min_border) min_border = d;
  }
  c.maxdeg = min_border >= c.d;
  for (const auto& t : o.terms()) c.r += w.degree(t.span()) == c.d ? 1 : 0;
  for (const auto& b : o.border()) c.s += w.degree(b.span()) == c.d ? 1 : 0;
  return c;
}

bool has_maxdeg_border(const OrderIdeal& o, const WeightVector& w) { return maxdeg_counts(o, w).maxdeg; }

}  // namespace bbs
