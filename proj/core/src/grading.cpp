#include "bbs/grading.hpp"

#include <algorithm>

#include "bbs/error.hpp"

namespace bbs {

namespace {

void require_width(const WeightVector& w, int n) {
  if (w.size() != n) throw Error(ErrorCode::InvalidArgument, "weight vector length does not match the variables");
}

}  // namespace

int degree_w(const Term& t, const WeightVector& w) {
  require_width(w, t.num_vars());
  return w.degree(t.span());
}

int degree_w(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return -1;
  require_width(w, f.context()->num_main());
  int d = 0;
  for (const auto& t : f.terms()) d = std::max(d, w.degree(t.mono.main()));
  return d;
}

Polynomial degree_form(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no degree form");
  int d = degree_w(f, w);
  std::vector<PolyTerm> top;
  for (const auto& t : f.terms()) {
    if (w.degree(t.mono.main()) == d) top.push_back(t);
  }
  return Polynomial::from_terms(f.context(), std::move(top));
}

bool is_homogeneous(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return true;
  int d = degree_w(f, w);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const PolyTerm& t) { return w.degree(t.mono.main()) == d; });
}

Polynomial homogenize(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot homogenize the zero polynomial");
  if (!f.context()->has_deform()) {
    throw Error(ErrorCode::MissingVariable, "homogenizing needs a deformation variable");
  }
  int d = degree_w(f, w);
  std::vector<PolyTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set_exponent({VarKind::Deform, 0}, m.deform() + d - w.degree(m.main()));
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.context(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& f) {
  std::vector<PolyTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set_exponent({VarKind::Deform, 0}, 0);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.context(), std::move(out));
}

}  // namespace bbs
