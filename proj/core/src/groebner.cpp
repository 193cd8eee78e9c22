#include "bbs/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "bbs/error.hpp"
#include "bbs/linalg.hpp"

namespace bbs {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (int c = main.compare(a.main(), b.main())) return c;
  if (int c = params.compare(a.params(), b.params())) return c;
  if (a.deform() != b.deform()) return a.deform() < b.deform() ? -1 : 1;
  return 0;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading monomial");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms()) {
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  }
  return *best;
}

namespace detail {

// Monomials are stored as order keys: a linear image of the exponent vector
// whose lexicographic order is the monomial order. Products are sums of keys.
struct Layout {
  int n = 0;
  int p = 0;
  int nvars = 0;  // n + p + 1
  int width = 0;  // key length
  std::vector<int> slot;
  std::vector<int> sign;
  // Per key entry, the coefficient of each variable: key = M * exps.
  std::vector<std::vector<int>> rows;

  Layout(const VariableContext& ctx, const MonomialOrder& order) {
    n = ctx.num_main();
    p = ctx.num_params();
    nvars = n + p + 1;
    slot.assign(static_cast<std::size_t>(nvars), 0);
    sign.assign(static_cast<std::size_t>(nvars), 1);
    add_block(order.main, 0, n);
    add_block(order.params, n, p);
    std::vector<int> z(static_cast<std::size_t>(nvars), 0);
    z[static_cast<std::size_t>(n + p)] = 1;
    slot[static_cast<std::size_t>(n + p)] = static_cast<int>(rows.size());
    rows.push_back(std::move(z));
    width = static_cast<int>(rows.size());
  }

  void add_block(const TermOrdering& ord, int first, int count) {
    if (count == 0) return;
    std::vector<int> head(static_cast<std::size_t>(nvars), 0);
    bool has_head = ord.kind() != TermOrdering::Kind::Lex;
    if (has_head) {
      for (int k = 0; k < count; ++k) {
        int w = 1;
        if (ord.kind() == TermOrdering::Kind::WeightedDegRevLex) {
          if (static_cast<int>(ord.weights().size()) != count) {
            throw Error(ErrorCode::InvalidArgument, "weight vector length does not match the variables");
          }
          w = ord.weights()[static_cast<std::size_t>(k)];
        }
        head[static_cast<std::size_t>(first + k)] = w;
      }
      rows.push_back(std::move(head));
    }
    bool rev = ord.kind() == TermOrdering::Kind::DegRevLex || ord.kind() == TermOrdering::Kind::WeightedDegRevLex;
    for (int q = 0; q < count; ++q) {
      int k = rev ? count - 1 - q : q;
      std::vector<int> r(static_cast<std::size_t>(nvars), 0);
      r[static_cast<std::size_t>(first + k)] = rev ? -1 : 1;
      slot[static_cast<std::size_t>(first + k)] = static_cast<int>(rows.size());
      sign[static_cast<std::size_t>(first + k)] = rev ? -1 : 1;
      rows.push_back(std::move(r));
    }
  }

  void key_of(const std::vector<int>& exps, int32_t* out) const {
    for (int r = 0; r < width; ++r) {
      long s = 0;
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (int v = 0; v < nvars; ++v) s += static_cast<long>(row[static_cast<std::size_t>(v)]) * exps[static_cast<std::size_t>(v)];
      out[r] = static_cast<int32_t>(s);
    }
  }

  int exp(const int32_t* key, int v) const {
    return sign[static_cast<std::size_t>(v)] * key[slot[static_cast<std::size_t>(v)]];
  }
};

struct EPoly {
  std::vector<int32_t> keys;  // size() * width, descending
  std::vector<Rational> coeffs;
  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }
};

inline int key_cmp(const int32_t* a, const int32_t* b, int w) {
  for (int r = 0; r < w; ++r) {
    if (a[r] != b[r]) return a[r] < b[r] ? -1 : 1;
  }
  return 0;
}

struct Lead {
  std::vector<int> exps;
  uint64_t mask = 0;
  int degree = 0;
};

struct Engine {
  Layout layout;
  ContextPtr ctx;
  std::vector<EPoly> polys;
  std::vector<Lead> leads;

  Engine(ContextPtr c, const MonomialOrder& order) : layout(*c, order), ctx(std::move(c)) {}

  int w() const { return layout.width; }
  const int32_t* key(const EPoly& f, std::size_t i) const { return f.keys.data() + i * static_cast<std::size_t>(w()); }

  std::vector<int> exps_of(const int32_t* k) const {
    std::vector<int> e(static_cast<std::size_t>(layout.nvars));
    for (int v = 0; v < layout.nvars; ++v) e[static_cast<std::size_t>(v)] = layout.exp(k, v);
    return e;
  }

  static uint64_t mask_of(const std::vector<int>& e) {
    uint64_t m = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0) m |= uint64_t{1} << (v % 64);
    }
    return m;
  }

  Lead lead_of(const EPoly& f) const {
    Lead l;
    l.exps = exps_of(key(f, 0));
    l.mask = mask_of(l.exps);
    l.degree = std::accumulate(l.exps.begin(), l.exps.end(), 0);
    return l;
  }

  EPoly from_polynomial(const Polynomial& f) const {
    const std::size_t m = f.size();
    std::vector<int32_t> raw(m * static_cast<std::size_t>(w()));
    for (std::size_t i = 0; i < m; ++i) layout.key_of(f.terms()[i].mono.raw(), raw.data() + i * static_cast<std::size_t>(w()));
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    const int ww = w();
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return key_cmp(raw.data() + a * static_cast<std::size_t>(ww), raw.data() + b * static_cast<std::size_t>(ww), ww) > 0;
    });
    EPoly e;
    e.keys.reserve(raw.size());
    e.coeffs.reserve(m);
    for (std::size_t i : perm) {
      e.keys.insert(e.keys.end(), raw.begin() + static_cast<long>(i * static_cast<std::size_t>(ww)),
                    raw.begin() + static_cast<long>((i + 1) * static_cast<std::size_t>(ww)));
      e.coeffs.push_back(f.terms()[i].coeff);
    }
    return e;
  }

  Polynomial to_polynomial(const EPoly& f) const {
    std::vector<PolyTerm> terms;
    terms.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<int> e = exps_of(key(f, i));
      Monomial m(layout.n, layout.p);
      for (int v = 0; v < layout.n; ++v) m.set_exponent({VarKind::Main, v}, e[static_cast<std::size_t>(v)]);
      for (int v = 0; v < layout.p; ++v) m.set_exponent({VarKind::Param, v}, e[static_cast<std::size_t>(layout.n + v)]);
      m.set_exponent({VarKind::Deform, 0}, e.back());
      terms.push_back({std::move(m), f.coeffs[i]});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  }

  void make_monic(EPoly& f) const {
    if (f.empty() || f.coeffs[0] == 1) return;
    Rational inv = 1 / f.coeffs[0];
    for (auto& c : f.coeffs) c *= inv;
  }

  // a[from..] - c * shift * b[1..] where shift * lead(b) == a[from] and the
  // leading terms cancel.
  EPoly reduce_step(const EPoly& a, std::size_t from, const Rational& c, const int32_t* shift, const EPoly& b) const {
    const int ww = w();
    EPoly out;
    out.keys.reserve((a.size() - from + b.size()) * static_cast<std::size_t>(ww));
    out.coeffs.reserve(a.size() - from + b.size());
    std::vector<int32_t> tmp(static_cast<std::size_t>(ww));
    std::size_t i = from + 1;
    std::size_t j = 1;
    auto shifted = [&](std::size_t jj) {
      const int32_t* k = key(b, jj);
      for (int r = 0; r < ww; ++r) tmp[static_cast<std::size_t>(r)] = k[r] + shift[r];
      return tmp.data();
    };
    auto push = [&](const int32_t* k, Rational q) {
      out.keys.insert(out.keys.end(), k, k + ww);
      out.coeffs.push_back(std::move(q));
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        push(key(a, i), a.coeffs[i]);
        ++i;
        continue;
      }
      const int32_t* kb = shifted(j);
      if (i == a.size()) {
        push(kb, -c * b.coeffs[j]);
        ++j;
        continue;
      }
      int cmp = key_cmp(key(a, i), kb, ww);
      if (cmp > 0) {
        push(key(a, i), a.coeffs[i]);
        ++i;
      } else if (cmp < 0) {
        push(kb, -c * b.coeffs[j]);
        ++j;
      } else {
        Rational s = a.coeffs[i] - c * b.coeffs[j];
        if (s != 0) push(kb, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  bool lead_divides(const Lead& l, const std::vector<int>& e, uint64_t mask) const {
    if ((l.mask & ~mask) != 0) return false;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (l.exps[v] > e[v]) return false;
    }
    return true;
  }

  // Index of the shortest basis element whose lead divides the term, or -1.
  int find_reducer(const int32_t* k, const std::vector<int>& active) const {
    std::vector<int> e = exps_of(k);
    uint64_t mask = mask_of(e);
    int best = -1;
    for (int g : active) {
      const Lead& l = leads[static_cast<std::size_t>(g)];
      if (!lead_divides(l, e, mask)) continue;
      if (best < 0 || polys[static_cast<std::size_t>(g)].size() < polys[static_cast<std::size_t>(best)].size()) best = g;
    }
    return best;
  }

  std::vector<int32_t> quotient_key(const int32_t* a, const int32_t* b) const {
    std::vector<int32_t> q(static_cast<std::size_t>(w()));
    for (int r = 0; r < w(); ++r) q[static_cast<std::size_t>(r)] = a[r] - b[r];
    return q;
  }

  EPoly reduce(EPoly f, const std::vector<int>& active, bool full) const {
    EPoly rest;
    std::size_t pos = 0;
    while (pos < f.size()) {
      int g = find_reducer(key(f, pos), active);
      if (g < 0) {
        if (!full) break;
        rest.keys.insert(rest.keys.end(), key(f, pos), key(f, pos) + w());
        rest.coeffs.push_back(f.coeffs[pos]);
        ++pos;
        continue;
      }
      const EPoly& gp = polys[static_cast<std::size_t>(g)];
      std::vector<int32_t> shift = quotient_key(key(f, pos), key(gp, 0));
      Rational c = f.coeffs[pos] / gp.coeffs[0];
      f = reduce_step(f, pos, c, shift.data(), gp);
      pos = 0;
    }
    if (!full) return f;
    return rest;
  }
};

}  // namespace detail

namespace {

using detail::Engine;
using detail::EPoly;
using detail::Lead;

thread_local BuchbergerStats g_stats;

struct Pair {
  int i;
  int j;
  std::vector<int> lcm;
  int sugar;
};

std::vector<int> lcm_exps(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> l(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) l[v] = std::max(a[v], b[v]);
  return l;
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

bool coprime(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > 0 && b[v] > 0) return false;
  }
  return true;
}

class Buchberger {
 public:
  explicit Buchberger(Engine& e) : e_(e) {}

  void insert(EPoly h) { insert(std::move(h), total_degree(h)); }

  void insert(EPoly h, int sugar) {
    e_.make_monic(h);
    int hi = static_cast<int>(e_.polys.size());
    e_.leads.push_back(e_.lead_of(h));
    e_.polys.push_back(std::move(h));
    sugar_.push_back(sugar);
    update(hi);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (less(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      ++g_stats.pairs_reduced;
      EPoly s = spoly(p);
      s = e_.reduce(std::move(s), active_, false);
      if (s.empty()) {
        ++g_stats.zero_reductions;
        continue;
      }
      insert(std::move(s), p.sugar);
    }
  }

  const std::vector<int>& active() const { return active_; }

 private:
  int total_degree(const EPoly& f) const {
    int d = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
      std::vector<int> e = e_.exps_of(e_.key(f, t));
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    }
    return d;
  }

  // Sugar strategy: pairs by the degree their S-polynomial would have had in
  // a homogenized computation, ties by the order on the lcm.
  bool less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    std::vector<int32_t> ka(static_cast<std::size_t>(e_.w()));
    std::vector<int32_t> kb(static_cast<std::size_t>(e_.w()));
    e_.layout.key_of(a.lcm, ka.data());
    e_.layout.key_of(b.lcm, kb.data());
    return detail::key_cmp(ka.data(), kb.data(), e_.w()) < 0;
  }

  EPoly spoly(const Pair& p) const {
    const EPoly& fi = e_.polys[static_cast<std::size_t>(p.i)];
    const EPoly& fj = e_.polys[static_cast<std::size_t>(p.j)];
    std::vector<int32_t> lk(static_cast<std::size_t>(e_.w()));
    e_.layout.key_of(p.lcm, lk.data());
    std::vector<int32_t> si = e_.quotient_key(lk.data(), e_.key(fi, 0));
    std::vector<int32_t> sj = e_.quotient_key(lk.data(), e_.key(fj, 0));
    // Build shift_i * f_i as a polynomial, then subtract shift_j * f_j.
    EPoly a;
    a.keys.resize(fi.keys.size());
    for (std::size_t t = 0; t < fi.size(); ++t) {
      for (int r = 0; r < e_.w(); ++r) {
        a.keys[t * static_cast<std::size_t>(e_.w()) + static_cast<std::size_t>(r)] =
            fi.keys[t * static_cast<std::size_t>(e_.w()) + static_cast<std::size_t>(r)] + si[static_cast<std::size_t>(r)];
      }
    }
    a.coeffs = fi.coeffs;
    return e_.reduce_step(a, 0, a.coeffs[0] / fj.coeffs[0], sj.data(), fj);
  }

  void update(int h) {
    const Lead& lh = e_.leads[static_cast<std::size_t>(h)];
    std::vector<Pair> c;
    for (int g : active_) {
      const Lead& lg = e_.leads[static_cast<std::size_t>(g)];
      std::vector<int> l = lcm_exps(lh.exps, lg.exps);
      int d = std::accumulate(l.begin(), l.end(), 0);
      int sugar = std::max(sugar_[static_cast<std::size_t>(g)] + d - lg.degree, sugar_[static_cast<std::size_t>(h)] + d - lh.degree);
      c.push_back({g, h, std::move(l), sugar});
    }
    g_stats.pairs_total += static_cast<long>(c.size());

    // Chain criterion among the new pairs.
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Lead& la = e_.leads[static_cast<std::size_t>(c[a].i)];
      bool keep = coprime(lh.exps, la.exps);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, c[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (divides(d[b].lcm, c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(std::move(c[a]));
    }
    // Product criterion.
    std::vector<Pair> e;
    for (auto& p : d) {
      if (!coprime(lh.exps, e_.leads[static_cast<std::size_t>(p.i)].exps)) e.push_back(std::move(p));
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      if (divides(lh.exps, p.lcm)) {
        std::vector<int> li = lcm_exps(e_.leads[static_cast<std::size_t>(p.i)].exps, lh.exps);
        std::vector<int> lj = lcm_exps(e_.leads[static_cast<std::size_t>(p.j)].exps, lh.exps);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    std::vector<int> next;
    for (int g : active_) {
      if (!divides(lh.exps, e_.leads[static_cast<std::size_t>(g)].exps)) next.push_back(g);
    }
    next.push_back(h);
    active_ = std::move(next);
  }

  Engine& e_;
  std::vector<int> sugar_;
  std::vector<Pair> pairs_;
  std::vector<int> active_;
};

ContextPtr pick_context(const std::vector<Polynomial>& gens, const ContextPtr& ctx) {
  ContextPtr c = ctx;
  for (const auto& g : gens) {
    if (!c) c = g.context();
    if (!same_context(c, g.context())) throw Error(ErrorCode::ContextMismatch, "generators belong to different contexts");
  }
  if (!c) throw Error(ErrorCode::InvalidArgument, "no context for an empty generator list");
  return c;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, const ContextPtr& ctx_in) {
  ContextPtr ctx = pick_context(gens, ctx_in);
  // Lex straight from the input tends to blow up coefficients; start from
  // the degrevlex basis instead.
  std::vector<Polynomial> seed = gens;
  if (order.main.kind() == TermOrdering::Kind::Lex || order.params.kind() == TermOrdering::Kind::Lex) {
    MonomialOrder graded = order;
    if (graded.main.kind() == TermOrdering::Kind::Lex) graded.main = TermOrdering::degrevlex();
    if (graded.params.kind() == TermOrdering::Kind::Lex) graded.params = TermOrdering::degrevlex();
    seed = buchberger(gens, graded, ctx).elements();
  }
  g_stats = {};
  auto engine = std::make_shared<Engine>(ctx, order);
  Buchberger bb(*engine);

  std::vector<Polynomial> sorted = seed;
  std::sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  for (const auto& g : sorted) {
    if (g.is_zero()) continue;
    EPoly h = engine->reduce(engine->from_polynomial(g), bb.active(), false);
    if (h.empty()) continue;
    bb.insert(std::move(h));
  }
  bb.run();

  // The active set is minimal; reduce tails to get the reduced basis.
  std::vector<int> active = bb.active();
  std::vector<EPoly> reduced;
  std::vector<Lead> leads;
  for (int g : active) {
    const EPoly& f = engine->polys[static_cast<std::size_t>(g)];
    EPoly tail;
    tail.keys.assign(f.keys.begin() + engine->w(), f.keys.end());
    tail.coeffs.assign(f.coeffs.begin() + 1, f.coeffs.end());
    EPoly r = engine->reduce(std::move(tail), active, true);
    EPoly full;
    full.keys.assign(f.keys.begin(), f.keys.begin() + engine->w());
    full.coeffs.push_back(f.coeffs[0]);
    full.keys.insert(full.keys.end(), r.keys.begin(), r.keys.end());
    full.coeffs.insert(full.coeffs.end(), r.coeffs.begin(), r.coeffs.end());
    engine->make_monic(full);
    reduced.push_back(std::move(full));
  }
  std::vector<std::size_t> perm(reduced.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return detail::key_cmp(engine->key(reduced[a], 0), engine->key(reduced[b], 0), engine->w()) < 0;
  });

  auto final_engine = std::make_shared<Engine>(ctx, order);
  GroebnerBasis gb;
  gb.ctx_ = ctx;
  gb.order_ = order;
  for (std::size_t k : perm) {
    final_engine->leads.push_back(final_engine->lead_of(reduced[k]));
    Polynomial p = final_engine->to_polynomial(reduced[k]);
    gb.leading_.push_back(leading_monomial(p, order));
    gb.elements_.push_back(std::move(p));
    final_engine->polys.push_back(std::move(reduced[k]));
  }
  gb.engine_ = std::move(final_engine);
  return gb;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrdering& sigma, const ContextPtr& ctx) {
  return buchberger(gens, MonomialOrder::of(sigma), ctx);
}

const BuchbergerStats& last_buchberger_stats() { return g_stats; }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_context(f.context(), gb.ctx_)) throw Error(ErrorCode::ContextMismatch, "polynomial and basis contexts differ");
  if (f.is_zero()) return f;
  const Engine& e = *gb.engine_;
  std::vector<int> all(e.polys.size());
  std::iota(all.begin(), all.end(), 0);
  return e.to_polynomial(e.reduce(e.from_polynomial(f), all, true));
}

OrderIdeal quotient_basis(const GroebnerBasis& gb) {
  const VariableContext& ctx = *gb.context();
  const int n = ctx.num_main();
  for (const auto& g : gb.elements()) {
    if (g.uses_params() || g.uses_deform()) {
      throw Error(ErrorCode::InvalidArgument, "quotient basis needs a basis in the main variables");
    }
  }
  if (gb.is_unit()) throw Error(ErrorCode::InvalidArgument, "the unit ideal has an empty quotient basis");
  std::vector<Term> leads;
  for (const auto& m : gb.leading()) leads.push_back(m.main_term());
  for (int k = 0; k < n; ++k) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Term& t) { return t[k] > 0 && t.degree() == t[k]; });
    if (!pure) throw Error(ErrorCode::NotZeroDimensional, "no leading term is a pure power of " + ctx.main_vars()[static_cast<std::size_t>(k)]);
  }
  auto standard = [&](const Term& t) {
    return std::none_of(leads.begin(), leads.end(), [&](const Term& l) { return l.divides(t); });
  };
  std::vector<Term> out{Term::one(n)};
  std::vector<Term> frontier = out;
  while (!frontier.empty()) {
    std::vector<Term> next;
    for (const auto& t : frontier) {
      for (int k = 0; k < n; ++k) {
        Term m = t.times_var(k);
        if (standard(m)) next.push_back(std::move(m));
      }
    }
    std::sort(next.begin(), next.end(), TermLess{});
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return OrderIdeal::from_terms(std::move(out));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

Polynomial division_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  Engine e(f.context(), order);
  std::vector<int> all;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    if (!same_context(d.context(), f.context())) throw Error(ErrorCode::ContextMismatch, "divisor context differs");
    all.push_back(static_cast<int>(e.polys.size()));
    e.polys.push_back(e.from_polynomial(d));
    e.leads.push_back(e.lead_of(e.polys.back()));
  }
  return e.to_polynomial(e.reduce(e.from_polynomial(f), all, true));
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  return ideal_member(f, buchberger(gens, order, f.context()));
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const MonomialOrder& order) {
  ContextPtr ctx = !a.empty() ? a.front().context() : (!b.empty() ? b.front().context() : nullptr);
  if (!ctx) return true;
  GroebnerBasis ga = buchberger(a, order, ctx);
  for (const auto& f : b) {
    if (!ideal_member(f, ga)) return false;
  }
  GroebnerBasis gb = buchberger(b, order, ctx);
  for (const auto& f : a) {
    if (!ideal_member(f, gb)) return false;
  }
  return true;
}

namespace {

// Smallest set of positions meeting every support (each a bitmask).
class HittingSet {
 public:
  explicit HittingSet(std::vector<uint64_t> sets) : sets_(std::move(sets)) {}

  int solve() {
    best_ = 65;
    search(0, 0);
    return best_;
  }

 private:
  int lower_bound(uint64_t chosen) const {
    // Greedy count of pairwise disjoint unhit sets.
    uint64_t used = 0;
    int count = 0;
    for (uint64_t s : sets_) {
      if ((s & chosen) != 0) continue;
      if ((s & used) == 0) {
        used |= s;
        ++count;
      }
    }
    return count;
  }

  void search(uint64_t chosen, int size) {
    if (size + lower_bound(chosen) >= best_) return;
    const uint64_t* pick = nullptr;
    int pick_count = 65;
    for (const uint64_t& s : sets_) {
      if ((s & chosen) != 0) continue;
      int c = std::popcount(s);
      if (c < pick_count) {
        pick_count = c;
        pick = &s;
      }
    }
    if (!pick) {
      best_ = size;
      return;
    }
    uint64_t s = *pick;
    while (s) {
      uint64_t bit = s & (~s + 1);
      search(chosen | bit, size + 1);
      s &= s - 1;
    }
  }

  std::vector<uint64_t> sets_;
  int best_ = 65;
};

}  // namespace

int krull_dimension(const GroebnerBasis& gb, const std::vector<VarRef>& vars) {
  if (vars.size() > 64) throw Error(ErrorCode::InvalidArgument, "dimension supports at most 64 variables");
  if (gb.is_unit()) return -1;
  std::vector<uint64_t> sets;
  for (const auto& m : gb.leading()) {
    uint64_t s = 0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (m.exponent(vars[k]) > 0) {
        s |= uint64_t{1} << k;
        ++used;
      }
    }
    int total = 0;
    for (int e : m.raw()) total += e > 0 ? 1 : 0;
    if (static_cast<int>(used) != total) {
      throw Error(ErrorCode::InvalidArgument, "a leading monomial uses a variable outside the given set");
    }
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return static_cast<int>(vars.size()) - HittingSet(std::move(sets)).solve();
}

int krull_dimension(const GroebnerBasis& gb) {
  const VariableContext& ctx = *gb.context();
  std::vector<VarRef> vars;
  for (int k = 0; k < ctx.num_main(); ++k) vars.push_back({VarKind::Main, k});
  for (int k = 0; k < ctx.num_params(); ++k) vars.push_back({VarKind::Param, k});
  if (ctx.has_deform()) vars.push_back({VarKind::Deform, 0});
  return krull_dimension(gb, vars);
}

WeightVector find_weight_vector(const std::vector<Polynomial>& polys, const std::vector<Term>& leading) {
  if (polys.size() != leading.size()) throw Error(ErrorCode::DimensionMismatch, "one leading term per polynomial is needed");
  if (polys.empty()) throw Error(ErrorCode::InvalidArgument, "no polynomials");
  const int n = polys.front().context()->num_main();
  std::vector<Inequality> system;
  for (int k = 0; k < n; ++k) {
    Inequality q{RatVector(static_cast<std::size_t>(n), Rational(0)), 1};
    q.a[static_cast<std::size_t>(k)] = 1;
    system.push_back(std::move(q));
  }
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (polys[j].uses_params() || polys[j].uses_deform()) {
      throw Error(ErrorCode::InvalidArgument, "weight search needs polynomials in the main variables");
    }
    bool found = false;
    for (const auto& t : polys[j].terms()) {
      Term u = t.mono.main_term();
      if (u == leading[j]) {
        found = true;
        continue;
      }
      Inequality q{RatVector(static_cast<std::size_t>(n)), 1};
      for (int k = 0; k < n; ++k) q.a[static_cast<std::size_t>(k)] = leading[j][k] - u[k];
      system.push_back(std::move(q));
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "leading term is not in the support");
  }
  auto point = fourier_motzkin(system, n);
  if (!point) throw Error(ErrorCode::Infeasible, "no positive weight vector makes the given terms leading");
  Integer l = 1;
  for (const auto& q : *point) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : *point) {
    ints.push_back(q.get_num() * (l / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<int> w;
  for (auto& v : ints) {
    Integer r = v / g;
    if (!r.fits_sint_p()) throw Error(ErrorCode::Infeasible, "weight vector entries overflow");
    w.push_back(static_cast<int>(r.get_si()));
  }
  WeightVector result(std::move(w));
  // Self-check.
  for (const auto& q : system) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += q.a[static_cast<std::size_t>(k)] * result[k];
    if (s < q.b) throw Error(ErrorCode::Infeasible, "weight vector failed its own inequality system");
  }
  return result;
}

}  // namespace bbs
