#include "bbs/deform.hpp"

#include <sstream>

#include "bbs/error.hpp"
#include "bbs/grading.hpp"

namespace bbs {

namespace {

std::string describe(const CommutatorEntry& e) {
  std::ostringstream os;
  os << "[A_" << e.k + 1 << ", A_" << e.l + 1 << "] entry (" << e.row + 1 << ", " << e.col + 1
     << ") = " << e.value.to_string();
  return os.str();
}

Polynomial z_power(const ContextPtr& ctx, int e) {
  Monomial m = Monomial::one(*ctx);
  m.set_exponent({VarKind::Deform, 0}, e);
  return Polynomial::monomial(ctx, m);
}

void require_constant(const BorderPrebasis& g, const char* what) {
  if (g.domain() != CoefficientDomain::Constant) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a prebasis with rational coefficients");
  }
}

void finish(DeformationFamily& f) {
  CommutingVerdict v = commuting_check(multiplication_matrices(f.prebasis));
  if (!v) throw Error(ErrorCode::NotFlat, "family is not flat: " + describe(*v.witness));
  f.verified = true;
}

}  // namespace

ContextPtr with_deform_var(const ContextPtr& ctx) {
  if (ctx->has_deform()) return ctx;
  std::string z = default_deform_name(ctx->main_vars());
  if (ctx->has_grid()) {
    return VariableContext::with_parameter_grid(ctx->main_vars(), ctx->grid_rows(), ctx->grid_cols(), z);
  }
  return VariableContext::make(ctx->main_vars(), ctx->param_vars(), z);
}

DeformationFamily degree_form_family(const BorderPrebasis& g, const WeightVector& w) {
  require_constant(g, "degree_form_family");
  if (!is_border_basis(g)) throw Error(ErrorCode::NotABasis, "input prebasis is not a border basis");
  const OrderIdeal& o = g.order_ideal();
  ContextPtr ctx = with_deform_var(g.context());
  PolyMatrix a(ctx, g.mu(), g.nu());
  for (int j = 0; j < g.nu(); ++j) {
    int db = degree_w(o.border_term(j), w);
    for (int i = 0; i < g.mu(); ++i) {
      const Polynomial& c = g.coeff(i, j);
      if (c.is_zero()) continue;
      int gap = db - degree_w(o.term(i), w);
      if (gap < 0) {
        throw Error(ErrorCode::BorderTermNotInDegreeForm,
                    "g_" + std::to_string(j + 1) + ": border term " + to_string(o.border_term(j), *ctx) +
                        " is not in the support of its degree form");
      }
      a.at(i, j) = transfer(c, ctx) * z_power(ctx, gap);
    }
  }
  DeformationFamily f{BorderPrebasis(o, std::move(a)), g.context(), {}, false};
  f.provenance.kind = Provenance::Kind::DegreeForm;
  f.provenance.weights = w;
  finish(f);
  return f;
}

DeformationFamily homogeneous_family(const BorderPrebasis& g, const WeightVector& w) {
  require_constant(g, "homogeneous_family");
  const OrderIdeal& o = g.order_ideal();
  for (int j = 0; j < g.nu(); ++j) {
    if (!is_homogeneous(g.polynomial(j), w)) {
      throw Error(ErrorCode::NotHomogeneous, "g_" + std::to_string(j + 1) + " is not homogeneous");
    }
  }
  if (!has_maxdeg_border(o, w)) throw Error(ErrorCode::NoMaxdegBorder, "order ideal has no maxdeg border");
  ContextPtr ctx = with_deform_var(g.context());
  Polynomial z = z_power(ctx, 1);
  PolyMatrix a = g.coefficients().map([&](const Polynomial& c) { return transfer(c, ctx) * z; });
  DeformationFamily f{BorderPrebasis(o, std::move(a)), g.context(), {}, false};
  f.provenance.kind = Provenance::Kind::HomogeneousScaling;
  f.provenance.weights = w;
  finish(f);
  return f;
}

DeformationFamily ratcurve_family(const GenericPrebasis& g, const CellSolution& cell,
                                  const std::optional<std::map<VarRef, Rational>>& point) {
  if (!cell.is_cell()) {
    throw Error(ErrorCode::ResidualNonEmpty,
                std::to_string(cell.residual.size()) + " residual generators; the scheme is not an affine cell");
  }
  ContextPtr ctx = with_deform_var(g.context());
  Polynomial z = z_power(ctx, 1);
  std::map<VarRef, Polynomial> curve;
  for (const VarRef& v : cell.free) {
    if (point) {
      auto it = point->find(v);
      if (it == point->end()) {
        throw Error(ErrorCode::Precondition, "point does not assign " + ctx->name(v));
      }
      curve[v] = z.scaled(it->second);
    } else {
      curve[v] = z * Polynomial::variable(ctx, v);
    }
  }
  std::map<VarRef, Polynomial> images = curve;
  for (const auto& [v, img] : cell.bound) images[v] = substitute(transfer(img, ctx), curve);
  PolyMatrix a = g.prebasis().coefficients().map([&](const Polynomial& c) {
    return substitute(transfer(c, ctx), images);
  });
  DeformationFamily f{BorderPrebasis(g.order_ideal(), std::move(a)), g.context(), {}, false};
  f.provenance.kind = Provenance::Kind::RationalCurve;
  if (point) {
    f.provenance.point = *point;
  } else {
    f.provenance.symbolic = true;
  }
  finish(f);
  return f;
}

bool FlatnessVerdict::flat() const {
  if (!commuting) return false;
  for (const auto& s : fibers) {
    if (!s.border_basis) return false;
  }
  return true;
}

const std::vector<Rational>& fiber_samples() {
  static const std::vector<Rational> samples{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return samples;
}

FlatnessVerdict verify_flat_family(const DeformationFamily& f) {
  FlatnessVerdict v;
  CommutingVerdict c = commuting_check(multiplication_matrices(f.prebasis));
  v.commuting = c.commuting;
  v.witness = c.witness;
  for (const Rational& at : fiber_samples()) {
    v.fibers.push_back({at, static_cast<bool>(is_border_basis(fiber(f, at)))});
  }
  return v;
}

BorderPrebasis fiber(const DeformationFamily& f, const Rational& c) {
  const ContextPtr& ctx = f.prebasis.context();
  ContextPtr target = f.source_context ? f.source_context : ctx;
  std::map<VarRef, Polynomial> at;
  if (ctx->has_deform()) at[f.deform_var()] = Polynomial::constant(target, c);
  return BorderPrebasis(f.prebasis.order_ideal(),
                        f.prebasis.coefficients().map([&](const Polynomial& p) { return substitute(p, at, target); }));
}

std::pair<DeformationFamily, DeformationFamily> full_deformation_pipeline(
    const std::vector<Polynomial>& gens, const OrderIdeal& o, const WeightVector& w, const TermOrdering& sigma) {
  BorderPrebasis g = border_basis_of_ideal(gens, o, sigma);
  DeformationFamily stage1 = degree_form_family(g, w);
  DeformationFamily stage2 = homogeneous_family(fiber(stage1, Rational(0)), w);
  return {std::move(stage1), std::move(stage2)};
}

}  // namespace bbs
