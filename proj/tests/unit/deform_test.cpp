#include <gtest/gtest.h>

#include <functional>

#include "bbs/deform.hpp"
#include "bbs/error.hpp"
#include "bbs/grading.hpp"
#include "bbs/groebner.hpp"
#include "bbs_cli/problem.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace bbs;
using namespace bbs::testing;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

cli::ProblemFile load(const std::string& name) { return cli::load_problem(fixture(name)); }

BorderPrebasis basis_of(const cli::ProblemFile& p) {
  return border_basis_of_ideal(*p.ideal, *p.order_ideal, TermOrdering::degrevlex());
}

ContextPtr one_ctx(const DeformationFamily& f) { return fiber(f, Rational(1)).context(); }

}  // namespace

TEST(Pipeline, FivePoints) {
  auto p = load("five_points.ring");
  auto [stage1, stage2] = full_deformation_pipeline(*p.ideal, *p.order_ideal, *p.weights, TermOrdering::degrevlex());
  EXPECT_TRUE(stage1.verified);
  EXPECT_TRUE(stage2.verified);
  EXPECT_TRUE(verify_flat_family(stage1));
  EXPECT_TRUE(verify_flat_family(stage2));
  auto ctx = stage1.prebasis.context();
  EXPECT_EQ(stage1.prebasis.polynomials(),
            Ps(ctx, {"x^2 + x*y - 1/2*y^2 - x*z - 1/2*y*z", "y^3 - y*z^2",
                     "x*y^2 + x^2*z - 1/2*y^2*z - x*z^2 - 1/2*y*z^2", "x^2*y - 1/2*y^2*z - 1/2*y*z^2", "x^3 - x*z^2"}));
  // The special fiber of stage 1 is the generic fiber of stage 2.
  EXPECT_EQ(fiber(stage1, Rational(0)).polynomials(), fiber(stage2, Rational(1)).polynomials());
  EXPECT_TRUE(ideal_equal(fiber(stage1, Rational(1)).polynomials(), *p.ideal, MonomialOrder::of(TermOrdering::degrevlex())));

  Relabel rel(*p.order_ideal, stage2.prebasis.context(), kFivePointNumbering.terms);
  MatrixSet a = multiplication_matrices(stage2.prebasis);
  ASSERT_EQ(a.size(), 2u);
  auto zctx = stage2.prebasis.context();
  EXPECT_EQ(rel.matrix(a[0]), matrix_of(zctx, kFivePointAx));
  EXPECT_EQ(rel.matrix(a[1]), matrix_of(zctx, kFivePointAy));
}

TEST(DegreeFormFamily, FibersAndShape) {
  auto p = load("staircase6.ring");
  BorderPrebasis g = basis_of(p);
  WeightVector w = WeightVector::standard(2);
  DeformationFamily f = degree_form_family(g, w);
  EXPECT_EQ(f.provenance.kind, Provenance::Kind::DegreeForm);
  EXPECT_EQ(fiber(f, Rational(1)).polynomials(), g.polynomials());
  BorderPrebasis special = fiber(f, Rational(0));
  for (int j = 0; j < g.nu(); ++j) EXPECT_EQ(special.polynomial(j), degree_form(g.polynomial(j), w));
  for (const auto& fc : verify_flat_family(f).fibers) EXPECT_TRUE(fc.border_basis) << fc.at;
  // Every coefficient carries z to the weight gap.
  for (int j = 0; j < g.nu(); ++j) {
    Polynomial gj = f.prebasis.polynomial(j);
    for (const auto& t : gj.terms()) {
      Term m = t.mono.main_term();
      EXPECT_EQ(t.mono.exponent(f.deform_var()) + w.degree(m.span()), w.degree(g.order_ideal().border_term(j).span()));
    }
  }
}

TEST(DegreeFormFamily, Errors) {
  auto nodf = load("staircase6_nodf.ring");
  EXPECT_EQ(code_of([&] { degree_form_family(*nodf.prebasis, WeightVector::standard(2)); }),
            ErrorCode::BorderTermNotInDegreeForm);
  auto ctx = ring({"x", "y"});
  BorderPrebasis perturbed =
      BorderPrebasis::from_polynomials(O(ctx, {"1", "x", "x^2", "x^3", "y", "y^2"}),
                                       Ps(ctx, {"x*y - 2*x^3 - x", "y^3", "x*y^2", "x^2*y", "x^3*y", "x^4"}));
  EXPECT_EQ(code_of([&] { degree_form_family(perturbed, WeightVector::standard(2)); }), ErrorCode::NotABasis);
}

TEST(HomogeneousFamily, SquarePoint) {
  auto p = load("square_hom.ring");
  DeformationFamily f = homogeneous_family(*p.prebasis, *p.weights);
  EXPECT_TRUE(f.verified);
  auto ctx = f.prebasis.context();
  EXPECT_EQ(f.prebasis.polynomials(), Ps(ctx, {"y^2 - x*y*z", "x^2 - x*y*z", "x*y^2", "x^2*y"}));
  EXPECT_EQ(fiber(f, Rational(1)).polynomials(), p.prebasis->polynomials());
  EXPECT_EQ(fiber(f, Rational(0)).polynomials(),
            BorderPrebasis::border_terms(*p.order_ideal, p.ring).polynomials());
  FlatnessVerdict v = verify_flat_family(f);
  EXPECT_TRUE(v.commuting);
  EXPECT_EQ(v.fibers.size(), fiber_samples().size());
}

TEST(HomogeneousFamily, Errors) {
  auto five = load("five_points.ring");
  BorderPrebasis g = basis_of(five);
  EXPECT_EQ(code_of([&] { homogeneous_family(g, WeightVector::standard(2)); }), ErrorCode::NotHomogeneous);
  auto ctx = ring({"x", "y"});
  OrderIdeal box = O(ctx, kNineBoxNumbering.terms);
  EXPECT_EQ(code_of([&] { homogeneous_family(BorderPrebasis::border_terms(box, ctx), WeightVector::standard(2)); }),
            ErrorCode::NoMaxdegBorder);
}

TEST(HomogeneousFamily, PerturbedIsNotFlat) {
  auto p = load("five_points_bad.ring");
  DeformationFamily f{*p.prebasis, p.ring, {Provenance::Kind::HomogeneousScaling, WeightVector::standard(2), {}, false}};
  FlatnessVerdict v = verify_flat_family(f);
  EXPECT_FALSE(v.commuting);
  EXPECT_FALSE(v.flat());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->value, P(f.prebasis.context(), "z^2"));
  EXPECT_TRUE(v.fibers.front().border_basis);
  for (std::size_t k = 1; k < v.fibers.size(); ++k) EXPECT_FALSE(v.fibers[k].border_basis);

  auto good = load("five_points_hom.ring");
  DeformationFamily h{*good.prebasis, good.ring, {Provenance::Kind::HomogeneousScaling, WeightVector::standard(2), {}, false}};
  EXPECT_TRUE(verify_flat_family(h));
}

TEST(RationalCurve, SquareSymbolic) {
  auto ctx = ring({"x", "y"}, std::string("z"));
  GenericPrebasis g = GenericPrebasis::make(O(ctx, kSquareNumbering.terms), {"x", "y"}, std::nullopt, std::string("z"));
  Relabel rel(g, kSquareNumbering);
  CellSolution cell = eliminate_linear_parameters(flatten(commutator_generators(g)), g.parameters());
  DeformationFamily f = ratcurve_family(g, cell, std::nullopt);
  EXPECT_TRUE(f.provenance.symbolic);
  EXPECT_TRUE(f.verified);
  ASSERT_EQ(f.prebasis.nu(), 4);
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(rel(f.prebasis.polynomial(j)), P(g.context(), kSquareCurve[static_cast<std::size_t>(j)])) << j;
  }
}

TEST(RationalCurve, SquarePoint) {
  auto p = load("square_point.ring");
  GenericPrebasis g = GenericPrebasis::make(*p.order_ideal, {"x", "y"});
  CellSolution cell = eliminate_linear_parameters(flatten(commutator_generators(g)), g.parameters());
  std::map<VarRef, Rational> point;
  for (const auto& [name, value] : p.point) point[*g.context()->find(name)] = value;
  DeformationFamily f = ratcurve_family(g, cell, point);
  EXPECT_TRUE(verify_flat_family(f));
  EXPECT_EQ(fiber(f, Rational(0)).polynomials(), BorderPrebasis::border_terms(g.order_ideal(), one_ctx(f)).polynomials());
  BorderPrebasis one = fiber(f, Rational(1));
  EXPECT_TRUE(is_border_basis(one).commuting);
  // The fiber at 1 is the point of the cell itself.
  std::map<VarRef, Rational> full = point;
  for (const auto& [v, image] : cell.bound) full[v] = evaluate(image, point).constant_term();
  EXPECT_EQ(one.polynomials(), g.specialize(full).polynomials());

  point.erase(point.begin());
  EXPECT_EQ(code_of([&] { ratcurve_family(g, cell, point); }), ErrorCode::Precondition);
}

TEST(RationalCurve, ResidualRejected) {
  auto ctx = ring({"x", "y", "w"});
  GenericPrebasis g = GenericPrebasis::make(O(ctx, {"1", "x", "y", "w"}), {"x", "y", "w"});
  CellSolution cell = eliminate_linear_parameters(flatten(commutator_generators(g)), g.parameters());
  ASSERT_FALSE(cell.residual.empty());
  EXPECT_EQ(code_of([&] { ratcurve_family(g, cell, std::nullopt); }), ErrorCode::ResidualNonEmpty);
}

TEST(Fibers, RandomBasesAlongTheDegreeFormFamily) {
  Rng rng(7);
  auto ctx = ring({"x", "y"});
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto ideal = point_ideal(ctx, random_points(rng, 2, rng.integer(2, 5)));
    OrderIdeal o = quotient_basis(buchberger(ideal, TermOrdering::degrevlex()));
    BorderPrebasis g = border_basis_of_ideal(ideal, o, TermOrdering::degrevlex());
    DeformationFamily f;
    try {
      f = degree_form_family(g, WeightVector::standard(2));
    } catch (const Error& e) {
      ASSERT_TRUE(is_mathematical_negative(e.code())) << e.what();
      continue;
    }
    ++checked;
    FlatnessVerdict v = verify_flat_family(f);
    EXPECT_TRUE(v.flat());
    EXPECT_EQ(fiber(f, Rational(1)).polynomials(), g.polynomials());
    Rational c = rng.nonzero_rational();
    EXPECT_TRUE(is_border_basis(fiber(f, c)).commuting) << c;
  }
  EXPECT_GT(checked, 15);
}

TEST(Context, DeformVariable) {
  auto ctx = ring({"x", "y"});
  ContextPtr z = with_deform_var(ctx);
  EXPECT_NE(z.get(), ctx.get());
  EXPECT_EQ(with_deform_var(z).get(), z.get());
  auto t = ring({"x", "y"}, std::string("t"));
  EXPECT_EQ(with_deform_var(t).get(), t.get());
}
