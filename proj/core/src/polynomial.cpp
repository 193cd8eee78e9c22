#include "bbs/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "bbs/error.hpp"

namespace bbs {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int n_main, int n_params)
    : e_(static_cast<std::size_t>(n_main + n_params + 1), 0), n_main_(n_main), n_params_(n_params) {}

Monomial::Monomial(const Term& main, std::vector<int> params, int deform)
    : n_main_(main.num_vars()), n_params_(static_cast<int>(params.size())) {
  e_.reserve(static_cast<std::size_t>(n_main_ + n_params_ + 1));
  e_.insert(e_.end(), main.exponents().begin(), main.exponents().end());
  e_.insert(e_.end(), params.begin(), params.end());
  e_.push_back(deform);
}

Monomial Monomial::one(const VariableContext& ctx) { return Monomial(ctx.num_main(), ctx.num_params()); }

Monomial Monomial::of_term(const VariableContext& ctx, const Term& t) {
  if (t.num_vars() != ctx.num_main()) {
    throw Error(ErrorCode::ContextMismatch, "term has the wrong number of variables");
  }
  Monomial m = one(ctx);
  std::copy(t.exponents().begin(), t.exponents().end(), m.e_.begin());
  return m;
}

int Monomial::exponent(VarRef v) const {
  switch (v.kind) {
    case VarKind::Main: return e_[static_cast<std::size_t>(v.index)];
    case VarKind::Param: return e_[static_cast<std::size_t>(n_main_ + v.index)];
    case VarKind::Deform: return e_.back();
  }
  return 0;
}

void Monomial::set_exponent(VarRef v, int e) {
  switch (v.kind) {
    case VarKind::Main: e_[static_cast<std::size_t>(v.index)] = e; break;
    case VarKind::Param: e_[static_cast<std::size_t>(n_main_ + v.index)] = e; break;
    case VarKind::Deform: e_.back() = e; break;
  }
}

Term Monomial::main_term() const { return Term(std::vector<int>(e_.begin(), e_.begin() + n_main_)); }

int Monomial::main_degree() const { return std::accumulate(e_.begin(), e_.begin() + n_main_, 0); }

int Monomial::param_degree() const {
  return std::accumulate(e_.begin() + n_main_, e_.begin() + n_main_ + n_params_, 0);
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

bool Monomial::has_main() const {
  return std::any_of(e_.begin(), e_.begin() + n_main_, [](int e) { return e != 0; });
}

bool Monomial::has_params() const {
  return std::any_of(e_.begin() + n_main_, e_.begin() + n_main_ + n_params_, [](int e) { return e != 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] > other.e_[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += other.e_[k];
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    m.e_[k] -= other.e_[k];
    if (m.e_[k] < 0) throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
  }
  return m;
}

int canonical_compare(const Monomial& a, const Monomial& b) {
  if (int c = degrevlex_compare(a.main(), b.main())) return c;
  if (int c = degrevlex_compare(a.params(), b.params())) return c;
  if (a.deform() != b.deform()) return a.deform() < b.deform() ? -1 : 1;
  return 0;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool descending(const PolyTerm& a, const PolyTerm& b) { return canonical_compare(a.mono, b.mono) > 0; }

std::vector<PolyTerm> merge(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b, bool subtract) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = canonical_compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? PolyTerm{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_string(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  auto emit = [&out](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  for (int k = 0; k < m.num_main(); ++k) emit(ctx.main_vars()[static_cast<std::size_t>(k)], m.main()[static_cast<std::size_t>(k)]);
  for (int k = 0; k < m.num_params(); ++k) emit(ctx.param_vars()[static_cast<std::size_t>(k)], m.params()[static_cast<std::size_t>(k)]);
  if (m.deform() != 0) emit(ctx.name({VarKind::Deform, 0}), m.deform());
  return out;
}

}  // namespace

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(ctx);
  if (c != 0) p.terms_.push_back({Monomial::one(*ctx), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, VarRef v) {
  Monomial m = Monomial::one(*ctx);
  if (v.kind == VarKind::Deform && !ctx->has_deform()) {
    throw Error(ErrorCode::MissingVariable, "context has no deformation variable");
  }
  m.set_exponent(v, 1);
  return monomial(std::move(ctx), m);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  auto v = ctx->find(name);
  if (!v) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(ctx), *v);
}

Polynomial Polynomial::monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::of_term(ContextPtr ctx, const Term& t, const Rational& c) {
  Monomial m = Monomial::of_term(*ctx, t);
  return monomial(std::move(ctx), m, c);
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial p(std::move(ctx));
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::main_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.main_degree());
  return d;
}

int Polynomial::param_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.param_degree());
  return d;
}

int Polynomial::deform_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.deform());
  return d;
}

bool Polynomial::uses_main() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const PolyTerm& t) { return t.mono.has_main(); });
}

bool Polynomial::uses_params() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const PolyTerm& t) { return t.mono.has_params(); });
}

bool Polynomial::uses_deform() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const PolyTerm& t) { return t.mono.deform() != 0; });
}

bool Polynomial::uses(VarRef v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const PolyTerm& t) { return t.mono.exponent(v) != 0; });
}

void Polynomial::require_same(const Polynomial& other) const {
  if (!same_context(ctx_, other.ctx_)) {
    throw Error(ErrorCode::ContextMismatch, "polynomials belong to different contexts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(other);
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(other);
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same(other);
  if (terms_.empty() || other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  std::vector<PolyTerm> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  *this = from_terms(ctx_, std::move(prod));
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_context(ctx_, other.ctx_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(t.mono, *ctx_);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p = a;
  p *= b;
  return p;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return a;
}

bool PolynomialLess::operator()(const Polynomial& a, const Polynomial& b) const {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (int c = canonical_compare(ta[i].mono, tb[i].mono)) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

Polynomial sign_normalized(const Polynomial& f) {
  if (!f.is_zero() && sgn(f.leading().coeff) < 0) return -f;
  return f;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(Rational(1) / f.leading().coeff);
}

Polynomial substitute(const Polynomial& f, const std::map<VarRef, Polynomial>& assignment,
                      const ContextPtr& target_in) {
  const ContextPtr& target = target_in ? target_in : f.context();
  const VariableContext& src = *f.context();
  for (const auto& [v, image] : assignment) {
    if (!same_context(image.context(), target)) {
      throw Error(ErrorCode::ContextMismatch, "substitution image lives outside the target context");
    }
    (void)v;
  }

  // Image of every source variable, resolved once.
  auto image_of = [&](VarRef v) -> Polynomial {
    if (auto it = assignment.find(v); it != assignment.end()) return it->second;
    const std::string& name = src.name(v);
    auto tv = target->find(name);
    if (!tv) {
      throw Error(ErrorCode::MissingVariable, "target context has no variable '" + name + "'");
    }
    return Polynomial::variable(target, *tv);
  };

  std::map<std::pair<VarRef, int>, Polynomial> powers;
  auto power = [&](VarRef v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, image_of(v).pow(static_cast<unsigned>(e))).first;
    return it->second;
  };

  std::vector<PolyTerm> acc;
  for (const auto& t : f.terms()) {
    Polynomial piece = Polynomial::constant(target, t.coeff);
    for (int k = 0; k < src.num_main() && !piece.is_zero(); ++k) {
      if (int e = t.mono.main()[static_cast<std::size_t>(k)]) piece *= power({VarKind::Main, k}, e);
    }
    for (int k = 0; k < src.num_params() && !piece.is_zero(); ++k) {
      if (int e = t.mono.params()[static_cast<std::size_t>(k)]) piece *= power({VarKind::Param, k}, e);
    }
    if (int e = t.mono.deform(); e != 0 && !piece.is_zero()) piece *= power({VarKind::Deform, 0}, e);
    acc.insert(acc.end(), piece.terms().begin(), piece.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial transfer(const Polynomial& f, const ContextPtr& target) { return substitute(f, {}, target); }

}  // namespace bbs
