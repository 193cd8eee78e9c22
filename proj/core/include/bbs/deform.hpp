#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bbs/border_basis.hpp"
#include "bbs/scheme.hpp"

namespace bbs {

struct Provenance {
  enum class Kind { DegreeForm, HomogeneousScaling, RationalCurve };
  Kind kind = Kind::DegreeForm;
  std::optional<WeightVector> weights;  // DegreeForm, HomogeneousScaling
  // RationalCurve: the point on the cell; empty with `symbolic` set when the
  // free parameters stay indeterminates.
  std::map<VarRef, Rational> point;
  bool symbolic = false;
};

/// A prebasis over Q[z] (plus parameters for a symbolic curve). The family
/// lives in the source context extended by the deformation variable.
struct DeformationFamily {
  BorderPrebasis prebasis;
  ContextPtr source_context;
  Provenance provenance;
  bool verified = false;  // commutators vanish identically in z

  VarRef deform_var() const { return {VarKind::Deform, 0}; }
};

/// a_ij -> a_ij z^(deg_W b_j - deg_W t_i). Requires a border basis with
/// b_j in Supp(DF_W(g_j)). Throws NotABasis, BorderTermNotInDegreeForm,
/// NotFlat (the witness entry is in the message).
DeformationFamily degree_form_family(const BorderPrebasis& g, const WeightVector& w);

/// a_ij -> a_ij z for a W-homogeneous prebasis of an order ideal with a
/// maxdeg_W border. Throws NotHomogeneous, NoMaxdegBorder, NotFlat.
DeformationFamily homogeneous_family(const BorderPrebasis& g, const WeightVector& w);

/// Free parameters v -> z * point(v), or z * v when `point` is empty;
/// bound parameters follow through their images. Throws ResidualNonEmpty,
/// Precondition when the point misses a free variable, NotFlat.
DeformationFamily ratcurve_family(const GenericPrebasis& g, const CellSolution& cell,
                                  const std::optional<std::map<VarRef, Rational>>& point);

struct FiberCheck {
  Rational at;
  bool border_basis = false;
};

struct FlatnessVerdict {
  bool commuting = false;
  std::optional<CommutatorEntry> witness;
  std::vector<FiberCheck> fibers;
  bool flat() const;
  explicit operator bool() const { return flat(); }
};

/// The sample points used for fiber checks: 0, 1, -1, 2, 1/2.
const std::vector<Rational>& fiber_samples();

FlatnessVerdict verify_flat_family(const DeformationFamily& f);

/// z -> c, expressed in the source context.
BorderPrebasis fiber(const DeformationFamily& f, const Rational& c);

/// Stage 1 deforms I to DF_W(I), stage 2 deforms DF_W(I) to BT_O.
std::pair<DeformationFamily, DeformationFamily> full_deformation_pipeline(
    const std::vector<Polynomial>& gens, const OrderIdeal& o, const WeightVector& w, const TermOrdering& sigma);

/// The source context if it has a deformation variable, otherwise a copy
/// with one added.
ContextPtr with_deform_var(const ContextPtr& ctx);

}  // namespace bbs
