#include "bbs/scheme.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "bbs/error.hpp"
#include "bbs/grading.hpp"
#include "bbs/groebner.hpp"
#include "bbs/linalg.hpp"
#include "bbs/parallel.hpp"

namespace bbs {

std::vector<std::string> default_main_vars(int n) {
  if (n <= 3) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(n));
    return names;
  }
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

std::string default_deform_name(const std::vector<std::string>& main_vars) {
  return std::find(main_vars.begin(), main_vars.end(), "z") == main_vars.end() ? "z" : "x0";
}

GenericPrebasis GenericPrebasis::make(const OrderIdeal& o, const std::vector<std::string>& main_vars,
                                      std::optional<WeightVector> weights, std::optional<std::string> deform) {
  if (static_cast<int>(main_vars.size()) != o.num_vars()) {
    throw Error(ErrorCode::ContextMismatch, "variable names do not match the order ideal");
  }
  if (weights && weights->size() != o.num_vars()) {
    throw Error(ErrorCode::InvalidArgument, "weight vector length does not match the variables");
  }
  std::string z = deform ? *deform : default_deform_name(main_vars);
  ContextPtr ctx = VariableContext::with_parameter_grid(main_vars, o.mu(), o.nu(), z);
  GenericPrebasis g;
  g.weights_ = weights;
  g.present_.assign(static_cast<std::size_t>(o.mu() * o.nu()), true);
  PolyMatrix a(ctx, o.mu(), o.nu());
  for (int i = 0; i < o.mu(); ++i) {
    for (int j = 0; j < o.nu(); ++j) {
      bool on = !weights || weights->degree(o.term(i).span()) == weights->degree(o.border_term(j).span());
      g.present_[static_cast<std::size_t>(i * o.nu() + j)] = on;
      if (on) a.at(i, j) = Polynomial::variable(ctx, VarRef{VarKind::Param, ctx->param_index(i + 1, j + 1)});
    }
  }
  g.prebasis_ = BorderPrebasis(o, std::move(a));
  return g;
}

bool GenericPrebasis::present(int i, int j) const {
  return present_[static_cast<std::size_t>(i * order_ideal().nu() + j)];
}

VarRef GenericPrebasis::parameter(int i, int j) const {
  return {VarKind::Param, context()->param_index(i + 1, j + 1)};
}

std::vector<VarRef> GenericPrebasis::parameters() const {
  std::vector<VarRef> out;
  for (int i = 0; i < order_ideal().mu(); ++i) {
    for (int j = 0; j < order_ideal().nu(); ++j) {
      if (present(i, j)) out.push_back(parameter(i, j));
    }
  }
  return out;
}

BorderPrebasis GenericPrebasis::specialize(const std::map<VarRef, Rational>& point) const {
  std::map<VarRef, Polynomial> assignment;
  for (const VarRef& v : parameters()) {
    auto it = point.find(v);
    if (it == point.end()) throw Error(ErrorCode::MissingVariable, "no value for " + context()->name(v));
    assignment.emplace(v, Polynomial::constant(context(), it->second));
  }
  return prebasis_.map_coefficients([&](const Polynomial& p) { return substitute(p, assignment); });
}

MatrixSet generic_matrices(const GenericPrebasis& g) { return multiplication_matrices(g.prebasis()); }

std::string GeneratorBlock::label() const {
  const char* name = kind == Kind::Comm ? "COMM" : (kind == Kind::NextDoor ? "ND" : "AS");
  return std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

namespace {

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& p : v) {
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

std::vector<Polynomial> coefficient_column(const GenericPrebasis& g, int j) {
  return g.prebasis().coefficients().column(j);
}

std::vector<Polynomial> scaled_sum(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return vector_add(a, b);
}

GeneratorBlock neighbor_block(const GenericPrebasis& g, const MatrixSet& mats, const WebEdge& e) {
  GeneratorBlock b;
  b.i = e.i;
  b.j = e.j;
  b.k = e.k;
  b.l = e.l;
  const PolyMatrix& ak = mats[static_cast<std::size_t>(e.k)];
  if (e.kind == WebEdge::Kind::NextDoor) {
    b.kind = GeneratorBlock::Kind::NextDoor;
    b.entries = vector_sub(coefficient_column(g, e.i), ak * coefficient_column(g, e.j));
  } else {
    b.kind = GeneratorBlock::Kind::AcrossStreet;
    b.corner = e.corner;
    b.witness = e.witness;
    const PolyMatrix& al = mats[static_cast<std::size_t>(e.l)];
    b.entries = vector_sub(ak * coefficient_column(g, e.i), al * coefficient_column(g, e.j));
  }
  b.polys = nonzero(b.entries);
  return b;
}

using PolySet = std::set<Polynomial, PolynomialLess>;

PolySet up_to_sign(const std::vector<Polynomial>& polys) {
  PolySet s;
  for (const auto& p : polys) {
    if (!p.is_zero()) s.insert(sign_normalized(p));
  }
  return s;
}

}  // namespace

std::vector<GeneratorBlock> commutator_generators(const GenericPrebasis& g) {
  MatrixSet mats = generic_matrices(g);
  const int n = static_cast<int>(mats.size());
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) pairs.emplace_back(k, l);
  }
  std::vector<GeneratorBlock> out(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int p) {
    auto [k, l] = pairs[static_cast<std::size_t>(p)];
    const PolyMatrix& a = mats[static_cast<std::size_t>(k)];
    const PolyMatrix& b = mats[static_cast<std::size_t>(l)];
    PolyMatrix c = a * b - b * a;
    GeneratorBlock& blk = out[static_cast<std::size_t>(p)];
    blk.kind = GeneratorBlock::Kind::Comm;
    blk.i = k;
    blk.j = l;
    for (int r = 0; r < c.rows(); ++r) {
      for (int s = 0; s < c.cols(); ++s) {
        if (!c.at(r, s).is_zero()) blk.polys.push_back(c.at(r, s));
      }
    }
  });
  return out;
}

std::vector<GeneratorBlock> syzygy_generators(const GenericPrebasis& g) {
  if (g.homogeneous()) throw Error(ErrorCode::Precondition, "neighbor syzygy generators need the plain scheme");
  MatrixSet mats = generic_matrices(g);
  BorderWeb web = border_web(g.order_ideal());
  std::vector<GeneratorBlock> out(web.edges.size());
  parallel_for(static_cast<int>(web.edges.size()), [&](int e) {
    out[static_cast<std::size_t>(e)] = neighbor_block(g, mats, web.edges[static_cast<std::size_t>(e)]);
  });
  return out;
}

std::vector<Polynomial> flatten(const std::vector<GeneratorBlock>& blocks) {
  std::vector<Polynomial> out;
  for (const auto& b : blocks) out.insert(out.end(), b.polys.begin(), b.polys.end());
  return out;
}

EquivalenceReport check_generation_equivalence(const GenericPrebasis& g) {
  EquivalenceReport r;
  PolySet comm = up_to_sign(flatten(commutator_generators(g)));
  std::vector<GeneratorBlock> syz = syzygy_generators(g);
  PolySet all = up_to_sign(flatten(syz));
  std::vector<GeneratorBlock> plain;
  for (const auto& b : syz) {
    if (!b.corner) plain.push_back(b);
  }
  PolySet cut = up_to_sign(flatten(plain));
  r.commutator_polys = static_cast<int>(comm.size());
  r.syzygy_polys = static_cast<int>(cut.size());
  r.commutators_covered = true;
  for (const auto& p : comm) {
    if (!all.count(p)) {
      r.commutators_covered = false;
      r.mismatch = "commutator entry not among neighbor entries: " + p.to_string();
      break;
    }
  }
  r.equal_without_corners = comm == cut;
  if (r.mismatch.empty() && !r.equal_without_corners) {
    for (const auto& p : cut) {
      if (!comm.count(p)) {
        r.mismatch = "neighbor entry not among commutator entries: " + p.to_string();
        break;
      }
    }
    if (r.mismatch.empty()) r.mismatch = "sets differ";
  }
  return r;
}

CornerCertificate corner_membership_certificate(const GenericPrebasis& g, const WebEdge& e) {
  if (e.kind != WebEdge::Kind::AcrossStreet || !e.corner || e.witness < 0) {
    throw Error(ErrorCode::Precondition, "edge is not across the corner");
  }
  MatrixSet mats = generic_matrices(g);
  const PolyMatrix& ak = mats[static_cast<std::size_t>(e.k)];
  const PolyMatrix& al = mats[static_cast<std::size_t>(e.l)];
  auto ci = coefficient_column(g, e.i);
  auto cj = coefficient_column(g, e.j);
  auto cm = coefficient_column(g, e.witness);
  CornerCertificate c;
  c.lhs = vector_sub(ak * ci, al * cj);
  c.first = ak * vector_sub(ci, al * cm);
  c.commutator = (ak * al - al * ak) * cm;
  c.last = al * vector_sub(cj, ak * cm);
  auto rhs = vector_sub(scaled_sum(c.first, c.commutator), c.last);
  if (rhs != c.lhs) throw Error(ErrorCode::IdentityFailed, "corner identity does not hold");
  return c;
}

MinimalizeResult minimalize_blocks(const GenericPrebasis& g, const std::vector<GeneratorBlock>& blocks) {
  using Kind = GeneratorBlock::Kind;
  const OrderIdeal& o = g.order_ideal();
  MinimalizeResult res;
  std::vector<bool> alive(blocks.size(), true);
  std::map<std::tuple<Kind, int, int>, std::size_t> where;
  for (std::size_t b = 0; b < blocks.size(); ++b) where[{blocks[b].kind, blocks[b].i, blocks[b].j}] = b;
  auto find = [&](Kind kind, int i, int j) -> std::optional<std::size_t> {
    auto it = where.find({kind, i, j});
    if (it == where.end() || !alive[it->second]) return std::nullopt;
    return it->second;
  };
  auto label = [](Kind kind, int i, int j) {
    GeneratorBlock b;
    b.kind = kind;
    b.i = i;
    b.j = j;
    return b.label();
  };

  BorderWeb web = border_web(o);
  for (const auto& e : web.edges) {
    if (!e.corner) continue;
    auto b = find(Kind::AcrossStreet, e.i, e.j);
    if (!b) continue;
    corner_membership_certificate(g, e);
    alive[*b] = false;
    res.log.push_back({blocks[*b].label(), "corner",
                       blocks[*b].label() + " = A_k ND(" + std::to_string(e.i + 1) + "," + std::to_string(e.witness + 1) +
                           ") + [A_k,A_l] c_m - A_l ND(" + std::to_string(e.j + 1) + "," + std::to_string(e.witness + 1) + ")",
                       {}});
  }

  // Rule (a): b_k = x b_i = x' b_j.
  for (int k = 0; k < o.nu(); ++k) {
    std::vector<int> below;
    for (const auto& e : web.edges) {
      if (e.kind == WebEdge::Kind::NextDoor && e.i == k) below.push_back(e.j);
    }
    std::sort(below.begin(), below.end());
    for (std::size_t x = 0; x < below.size(); ++x) {
      for (std::size_t y = x + 1; y < below.size(); ++y) {
        int i = below[x];
        int j = below[y];
        auto as = find(Kind::AcrossStreet, i, j);
        auto ndi = find(Kind::NextDoor, k, i);
        auto ndj = find(Kind::NextDoor, k, j);
        if (!as || !ndi || !ndj) continue;
        if (vector_sub(blocks[*ndj].entries, blocks[*ndi].entries) != blocks[*as].entries) {
          throw Error(ErrorCode::IdentityFailed, "rule (a) identity fails for " + blocks[*as].label());
        }
        alive[*as] = false;
        res.log.push_back({blocks[*as].label(), "a",
                           blocks[*as].label() + " = " + blocks[*ndj].label() + " - " + blocks[*ndi].label(),
                           {blocks[*ndi].label(), blocks[*ndj].label()}});
      }
    }
  }

  // Rule (b): x_a b_i = x_b b_j = x_c b_k with i < j < k.
  std::map<std::vector<int>, std::set<int>> by_lcm;
  for (const auto& e : web.edges) {
    if (e.kind != WebEdge::Kind::AcrossStreet) continue;
    Term l = o.border_term(e.i).lcm(o.border_term(e.j));
    by_lcm[l.exponents()].insert(e.i);
    by_lcm[l.exponents()].insert(e.j);
  }
  for (const auto& [lcm, verts] : by_lcm) {
    std::vector<int> v(verts.begin(), verts.end());
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        for (std::size_t c = b + 1; c < v.size(); ++c) {
          int i = v[a];
          int j = v[b];
          int k = v[c];
          const Term& bi = o.border_term(i);
          const Term& bj = o.border_term(j);
          const Term& bk = o.border_term(k);
          if (bi.lcm(bj).exponents() != lcm || bi.lcm(bk).exponents() != lcm || bj.lcm(bk).exponents() != lcm) continue;
          auto ij = find(Kind::AcrossStreet, i, j);
          auto ik = find(Kind::AcrossStreet, i, k);
          auto jk = find(Kind::AcrossStreet, j, k);
          if (!ij || !ik || !jk) continue;
          if (vector_sub(blocks[*ik].entries, blocks[*jk].entries) != blocks[*ij].entries) {
            throw Error(ErrorCode::IdentityFailed, "rule (b) identity fails for " + label(Kind::AcrossStreet, i, j));
          }
          alive[*jk] = false;
          res.log.push_back({blocks[*jk].label(), "b",
                             blocks[*jk].label() + " = " + blocks[*ik].label() + " - " + blocks[*ij].label(),
                             {blocks[*ij].label(), blocks[*ik].label()}});
        }
      }
    }
  }

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (alive[b]) res.kept.push_back(blocks[b]);
  }
  return res;
}

const Polynomial* CellSolution::image(VarRef v) const {
  for (const auto& [w, p] : bound) {
    if (w == v) return &p;
  }
  return nullptr;
}

namespace {

bool param_var_compare(VarRef a, VarRef b) { return a.index < b.index; }

// Every polynomial homogeneous for `grading`, which covers all its variables.
bool is_graded(const std::vector<Polynomial>& polys, const std::map<VarRef, int>& grading) {
  for (const auto& p : polys) {
    int d = -1;
    for (const auto& t : p.terms()) {
      int e = 0;
      int covered = 0;
      for (const auto& [v, w] : grading) {
        e += t.mono.exponent(v) * w;
        covered += t.mono.exponent(v);
      }
      int total = 0;
      for (int x : t.mono.raw()) total += x;
      if (covered != total) return false;
      if (d >= 0 && e != d) return false;
      d = e;
    }
  }
  return true;
}

// The single parameter of a monomial of the form c (degree one, no other
// variable), or nullopt.
std::optional<VarRef> linear_param(const Monomial& m) {
  if (m.has_main() || m.deform() != 0 || m.param_degree() != 1) return std::nullopt;
  auto p = m.params();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 1) return VarRef{VarKind::Param, static_cast<int>(k)};
  }
  return std::nullopt;
}

}  // namespace

std::vector<Polynomial> linear_interreduce(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> in = nonzero(polys);
  if (in.empty()) return {};
  ContextPtr ctx = in.front().context();
  std::vector<Monomial> cols;
  for (const auto& p : in) {
    for (const auto& t : p.terms()) cols.push_back(t.mono);
  }
  std::sort(cols.begin(), cols.end(), [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) > 0; });
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  auto col_of = [&](const Monomial& m) {
    auto it = std::lower_bound(cols.begin(), cols.end(), m,
                               [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) > 0; });
    return static_cast<std::size_t>(it - cols.begin());
  };
  RatMatrix m(in.size(), RatVector(cols.size(), Rational(0)));
  for (std::size_t r = 0; r < in.size(); ++r) {
    for (const auto& t : in[r].terms()) m[r][col_of(t.mono)] = t.coeff;
  }
  Echelon e = rref(std::move(m));
  std::vector<Polynomial> out;
  for (const auto& row : e.rows) {
    std::vector<PolyTerm> terms;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (row[c] != 0) terms.push_back({cols[c], row[c]});
    }
    out.push_back(Polynomial::from_terms(ctx, std::move(terms)));
  }
  return out;
}

CellSolution eliminate_linear_parameters(const std::vector<Polynomial>& gens_in, const std::vector<VarRef>& ambient,
                                         Pivot pivot) {
  CellSolution sol;
  sol.ambient = ambient;
  std::sort(sol.ambient.begin(), sol.ambient.end(), param_var_compare);
  std::vector<Polynomial> gens = nonzero(gens_in);
  while (true) {
    std::optional<VarRef> best_var;
    std::size_t best_gen = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Polynomial& g = gens[gi];
      for (const auto& t : g.terms()) {
        auto v = linear_param(t.mono);
        if (!v) continue;
        int uses = 0;
        for (const auto& u : g.terms()) uses += u.mono.exponent(*v) > 0 ? 1 : 0;
        if (uses != 1) continue;
        bool better = false;
        if (!best_var) {
          better = true;
        } else if (pivot == Pivot::SmallestIndex) {
          better = v->index < best_var->index || (v->index == best_var->index && g.size() < gens[best_gen].size());
        } else {
          const Polynomial& b = gens[best_gen];
          auto key = [](const Polynomial& p, VarRef w) { return std::make_tuple(p.param_degree(), p.size(), w.index); };
          better = key(g, *v) < key(b, *best_var);
        }
        if (better) {
          best_var = v;
          best_gen = gi;
        }
      }
    }
    if (!best_var) break;
    const Polynomial& g = gens[best_gen];
    ContextPtr ctx = g.context();
    Monomial vm = Monomial::one(*ctx);
    vm.set_exponent(*best_var, 1);
    Rational a = g.coefficient(vm);
    Polynomial image = (Polynomial::monomial(ctx, vm, a) - g).scaled(1 / a);
    std::map<VarRef, Polynomial> assign{{*best_var, image}};
    for (auto& [w, p] : sol.bound) p = substitute(p, assign);
    sol.bound.emplace_back(*best_var, image);
    std::vector<Polynomial> next;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (gi == best_gen) continue;
      Polynomial s = substitute(gens[gi], assign);
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    gens = std::move(next);
  }
  for (const VarRef& v : sol.ambient) {
    if (!sol.image(v)) sol.free.push_back(v);
  }
  sol.residual = linear_interreduce(gens);
  // Homogeneous residuals are further cut to a graded minimal system.
  std::map<VarRef, int> standard;
  for (const VarRef& v : sol.free) standard[v] = 1;
  if (!sol.residual.empty() && is_graded(sol.residual, standard)) sol.residual = minimal_generators(sol.residual, standard);
  return sol;
}

namespace {

struct ReducedIdeal {
  CellSolution cell;
  std::map<VarRef, Polynomial> images;
  GroebnerBasis gb;
};

ReducedIdeal reduce_ideal(const std::vector<Polynomial>& gens, const std::vector<VarRef>& ambient, ContextPtr ctx) {
  ReducedIdeal r;
  r.cell = eliminate_linear_parameters(gens, ambient, Pivot::LowestDegree);
  r.images = std::map<VarRef, Polynomial>(r.cell.bound.begin(), r.cell.bound.end());
  r.gb = buchberger(r.cell.residual, MonomialOrder::of(TermOrdering::degrevlex()), std::move(ctx));
  return r;
}

ContextPtr context_of(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (!a.empty()) return a.front().context();
  if (!b.empty()) return b.front().context();
  return nullptr;
}

bool contains(const ReducedIdeal& r, const std::vector<Polynomial>& polys) {
  for (const auto& f : polys) {
    if (!ideal_member(substitute(f, r.images), r.gb)) return false;
  }
  return true;
}

}  // namespace

bool scheme_ideal_contains(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& polys,
                           const std::vector<VarRef>& ambient) {
  ContextPtr ctx = context_of(gens, polys);
  if (!ctx) return true;
  // Division by the generators settles most members without a basis.
  std::vector<Polynomial> open;
  for (const auto& f : polys) {
    if (!division_remainder(f, gens, MonomialOrder::of(TermOrdering::degrevlex())).is_zero()) open.push_back(f);
  }
  return open.empty() || contains(reduce_ideal(gens, ambient, ctx), open);
}

bool scheme_ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                        const std::vector<VarRef>& ambient) {
  ContextPtr ctx = context_of(a, b);
  if (!ctx) return true;
  return scheme_ideal_contains(a, b, ambient) && scheme_ideal_contains(b, a, ambient);
}

int scheme_dimension(const std::vector<Polynomial>& gens, const std::vector<VarRef>& ambient) {
  if (gens.empty()) return static_cast<int>(ambient.size());
  ReducedIdeal r = reduce_ideal(gens, ambient, gens.front().context());
  return krull_dimension(r.gb, r.cell.free);
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens_in, const std::map<VarRef, int>& grading) {
  std::vector<Polynomial> gens = nonzero(gens_in);
  std::vector<Polynomial> kept;
  if (gens.empty()) return kept;
  ContextPtr ctx = gens.front().context();
  std::vector<VarRef> vars;
  std::vector<int> weights;
  for (const auto& [v, w] : grading) {
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "grading weights must be positive");
    vars.push_back(v);
    weights.push_back(w);
  }
  auto mono_degree = [&](const Monomial& m) {
    int d = 0;
    int covered = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      int e = m.exponent(vars[k]);
      d += e * weights[k];
      covered += e;
    }
    int total = 0;
    for (int e : m.raw()) total += e;
    if (covered != total) throw Error(ErrorCode::InvalidArgument, "generator uses a variable outside the grading");
    return d;
  };
  std::vector<int> deg;
  for (const auto& g : gens) {
    int d = mono_degree(g.terms().front().mono);
    for (const auto& t : g.terms()) {
      if (mono_degree(t.mono) != d) throw Error(ErrorCode::NotHomogeneous, "generator is not homogeneous: " + g.to_string());
    }
    deg.push_back(d);
  }

  // Monomials of degree e in the graded variables.
  std::function<void(std::size_t, int, Monomial&, std::vector<Monomial>&)> enumerate =
      [&](std::size_t k, int e, Monomial& cur, std::vector<Monomial>& out) {
        if (e == 0) {
          out.push_back(cur);
          return;
        }
        if (k == vars.size()) return;
        for (int p = 0; p * weights[k] <= e; ++p) {
          cur.set_exponent(vars[k], p);
          enumerate(k + 1, e - p * weights[k], cur, out);
        }
        cur.set_exponent(vars[k], 0);
      };

  std::set<int> degrees(deg.begin(), deg.end());
  for (int d : degrees) {
    std::map<std::vector<int>, int> column;
    auto row_of = [&](const Polynomial& p) {
      IncrementalEchelon::SparseRow row;
      for (const auto& t : p.terms()) {
        auto [it, inserted] = column.emplace(t.mono.raw(), static_cast<int>(column.size()));
        row.emplace_back(it->second, t.coeff);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return row;
    };
    IncrementalEchelon ech;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (deg[gi] >= d) continue;
      std::vector<Monomial> ms;
      Monomial cur = Monomial::one(*ctx);
      enumerate(0, d - deg[gi], cur, ms);
      for (const auto& m : ms) ech.add(row_of(gens[gi].times(m)));
    }
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (deg[gi] == d && ech.add(row_of(gens[gi]))) kept.push_back(gens[gi]);
    }
  }
  return kept;
}

int minimal_generator_count(const std::vector<Polynomial>& gens, const std::map<VarRef, int>& grading) {
  return static_cast<int>(minimal_generators(gens, grading).size());
}

std::map<VarRef, Polynomial> parameter_relabeling(const GenericPrebasis& g, const std::vector<Term>& o_order,
                                                  const std::vector<Term>& border_order) {
  const OrderIdeal& o = g.order_ideal();
  auto positions = [](const std::vector<Term>& order, int size, auto index_of, const char* what) {
    if (static_cast<int>(order.size()) != size) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " relabeling has the wrong length");
    }
    std::vector<int> pos(static_cast<std::size_t>(size), -1);
    for (int p = 0; p < size; ++p) {
      int i = index_of(order[static_cast<std::size_t>(p)]);
      if (i < 0 || pos[static_cast<std::size_t>(i)] >= 0) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " relabeling is not a permutation");
      }
      pos[static_cast<std::size_t>(i)] = p;
    }
    return pos;
  };
  std::vector<int> rows = positions(o_order, o.mu(), [&](const Term& t) { return o.index_of(t).value_or(-1); }, "order ideal");
  std::vector<int> cols =
      positions(border_order, o.nu(), [&](const Term& t) { return o.border_index_of(t).value_or(-1); }, "border");
  std::map<VarRef, Polynomial> out;
  for (int i = 0; i < o.mu(); ++i) {
    for (int j = 0; j < o.nu(); ++j) {
      out[g.parameter(i, j)] =
          Polynomial::variable(g.context(), g.parameter(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

std::map<VarRef, int> arrow_grading(const GenericPrebasis& g) {
  const OrderIdeal& o = g.order_ideal();
  WeightVector w = g.weights().value_or(WeightVector::standard(o.num_vars()));
  std::map<VarRef, int> out;
  for (int i = 0; i < o.mu(); ++i) {
    for (int j = 0; j < o.nu(); ++j) {
      if (g.present(i, j)) out[g.parameter(i, j)] = w.degree(o.border_term(j).span()) - w.degree(o.term(i).span());
    }
  }
  return out;
}

MonomialOrder scheme_order(const GenericPrebasis& g) {
  std::vector<int> weights(static_cast<std::size_t>(g.context()->num_params()), 1);
  for (const auto& [v, d] : arrow_grading(g)) {
    if (d < 1) return MonomialOrder{};
    weights[static_cast<std::size_t>(v.index)] = d;
  }
  return MonomialOrder{TermOrdering::degrevlex(), TermOrdering::weighted(WeightVector(weights))};
}

}  // namespace bbs
