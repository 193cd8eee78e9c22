#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbs/border_basis.hpp"

namespace bbs {

/// Default main variable names: x, y, z for n <= 3, else x1..xn.
std::vector<std::string> default_main_vars(int n);
/// "z", or "x0" when z is already a main variable.
std::string default_deform_name(const std::vector<std::string>& main_vars);

/// g_j = b_j - sum_i c_ij t_i over Q[c]. In the homogeneous case only the
/// c_ij with deg_W t_i = deg_W b_j occur; the others are zero.
class GenericPrebasis {
 public:
  static GenericPrebasis make(const OrderIdeal& o, const std::vector<std::string>& main_vars,
                              std::optional<WeightVector> homogeneous_weights = std::nullopt,
                              std::optional<std::string> deform = std::nullopt);

  const OrderIdeal& order_ideal() const { return prebasis_.order_ideal(); }
  const BorderPrebasis& prebasis() const { return prebasis_; }
  const ContextPtr& context() const { return prebasis_.context(); }
  bool homogeneous() const { return weights_.has_value(); }
  const std::optional<WeightVector>& weights() const { return weights_; }

  /// Whether c_ij (0-based) is an indeterminate rather than forced to 0.
  bool present(int i, int j) const;
  /// The indeterminates that occur, in flat row-major order.
  std::vector<VarRef> parameters() const;
  VarRef parameter(int i, int j) const;

  /// Evaluates the prebasis at a point: c_ij -> value for every present c_ij.
  BorderPrebasis specialize(const std::map<VarRef, Rational>& point) const;

 private:
  BorderPrebasis prebasis_;
  std::optional<WeightVector> weights_;
  std::vector<bool> present_;
};

MatrixSet generic_matrices(const GenericPrebasis& g);

struct GeneratorBlock {
  enum class Kind { Comm, NextDoor, AcrossStreet };
  Kind kind = Kind::Comm;
  // Comm: i, j are the variable indices k < l.
  // NextDoor: b_i = x_k b_j.  AcrossStreet: x_k b_i = x_l b_j, i < j.
  int i = 0;
  int j = 0;
  int k = -1;
  int l = -1;
  bool corner = false;
  int witness = -1;
  // ND/AS: the full length-mu vector; Comm: empty.
  std::vector<Polynomial> entries;
  // Nonzero entries, in row-major / vector order.
  std::vector<Polynomial> polys;

  /// "COMM(1,2)", "ND(3,1)", "AS(2,4)" with 1-based indices.
  std::string label() const;
};

std::vector<GeneratorBlock> commutator_generators(const GenericPrebasis& g);
std::vector<GeneratorBlock> syzygy_generators(const GenericPrebasis& g);

/// All polynomials of the given blocks, in block order.
std::vector<Polynomial> flatten(const std::vector<GeneratorBlock>& blocks);

struct EquivalenceReport {
  bool commutators_covered = false;     // every commutator entry is an ND/AS entry up to sign
  bool equal_without_corners = false;   // the two sets coincide up to sign after dropping corners
  int commutator_polys = 0;             // distinct up to sign
  int syzygy_polys = 0;                 // distinct up to sign, corners dropped
  std::string mismatch;                 // first failure, empty on success
  explicit operator bool() const { return commutators_covered && equal_without_corners; }
};

EquivalenceReport check_generation_equivalence(const GenericPrebasis& g);

/// For a corner edge with witness m (b_i = x_l b_m, b_j = x_k b_m), checks
/// A_k c_i - A_l c_j = A_k (c_i - A_l c_m) + (A_k A_l - A_l A_k) c_m - A_l (c_j - A_k c_m)
/// entrywise. Throws Precondition for a non-corner edge, IdentityFailed on
/// mismatch.
struct CornerCertificate {
  std::vector<Polynomial> lhs;
  std::vector<Polynomial> first;       // A_k (c_i - A_l c_m)
  std::vector<Polynomial> commutator;  // (A_k A_l - A_l A_k) c_m
  std::vector<Polynomial> last;        // A_l (c_j - A_k c_m)
};
CornerCertificate corner_membership_certificate(const GenericPrebasis& g, const WebEdge& edge);

struct Removal {
  std::string removed;
  std::string rule;                       // "corner", "a", "b"
  std::string identity;                   // the verified relation
  std::vector<std::string> alternatives;  // other blocks the rule could have dropped
};

struct MinimalizeResult {
  std::vector<GeneratorBlock> kept;
  std::vector<Removal> log;
};

/// Drops corner blocks, then applies the next-door and across-the-street
/// triangle rules, each after verifying its linear identity entrywise.
/// Throws IdentityFailed if a relation does not hold.
MinimalizeResult minimalize_blocks(const GenericPrebasis& g, const std::vector<GeneratorBlock>& blocks);

struct CellSolution {
  std::vector<VarRef> ambient;
  std::vector<VarRef> free;
  std::vector<std::pair<VarRef, Polynomial>> bound;  // elimination order; images in free variables
  std::vector<Polynomial> residual;

  bool is_cell() const { return residual.empty(); }
  const Polynomial* image(VarRef v) const;
};

enum class Pivot {
  SmallestIndex,  // the variable with the smallest flat index
  LowestDegree,   // the generator of lowest parameter degree, then fewest terms
};

/// Solves generators of the form a*v + (terms without v), a a nonzero
/// rational, for v; substitutes and repeats. The residual is linearly
/// interreduced and, when homogeneous in the free variables, cut to a graded
/// minimal generating set.
CellSolution eliminate_linear_parameters(const std::vector<Polynomial>& gens, const std::vector<VarRef>& ambient,
                                         Pivot pivot = Pivot::SmallestIndex);

/// Ideal questions in Q[ambient] answered in Q[free]/(residual) after
/// eliminate_linear_parameters on `gens`. The Groebner basis is taken of the
/// residual only, which is far smaller than one of the full scheme ideal.
/// Containment first tries plain division by `gens`; a zero remainder is
/// accepted without any basis.
bool scheme_ideal_contains(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& polys,
                           const std::vector<VarRef>& ambient);
bool scheme_ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                        const std::vector<VarRef>& ambient);
int scheme_dimension(const std::vector<Polynomial>& gens, const std::vector<VarRef>& ambient);

/// A minimal generating subset, chosen degree by degree: a generator is kept
/// iff it is not in the span of the kept generators of its degree and the
/// multiples of lower-degree generators. Throws NotHomogeneous.
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens, const std::map<VarRef, int>& grading);

/// Graded count of minimal generators. Throws NotHomogeneous.
int minimal_generator_count(const std::vector<Polynomial>& gens, const std::map<VarRef, int>& grading);

/// deg c_ij = deg_W b_j - deg_W t_i (W the prebasis weights, else the
/// standard grading). The scheme equations are homogeneous for it.
std::map<VarRef, int> arrow_grading(const GenericPrebasis& g);

/// Block order for computations with scheme equations: weighted degrevlex
/// on the parameters by the arrow grading when every degree is positive,
/// plain degrevlex otherwise.
MonomialOrder scheme_order(const GenericPrebasis& g);

/// Renames c_ij to c_i'j', where t_i is the i'-th term of `o_order` and b_j
/// the j'-th term of `border_order` (1-based). Both lists must be
/// permutations of O and the border. Use with substitute().
std::map<VarRef, Polynomial> parameter_relabeling(const GenericPrebasis& g, const std::vector<Term>& o_order,
                                                  const std::vector<Term>& border_order);

/// Linear interreduction: a basis of the Q-span of the polynomials, in
/// reduced echelon form over the canonical monomial order.
std::vector<Polynomial> linear_interreduce(const std::vector<Polynomial>& polys);

}  // namespace bbs
