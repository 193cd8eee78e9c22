#include <gtest/gtest.h>

#include "bbs/border_basis.hpp"
#include "bbs/error.hpp"
#include "bbs/grading.hpp"
#include "bbs/groebner.hpp"
#include "test_support.hpp"

using namespace bbs;
using namespace bbs::testing;

namespace {

OrderIdeal staircase6(const ContextPtr& ctx) { return O(ctx, {"1", "x", "x^2", "x^3", "y", "y^2"}); }

Polynomial recombine(const DivisionResult& d, const BorderPrebasis& g) {
  Polynomial sum = d.remainder;
  for (int j = 0; j < g.nu(); ++j) sum += d.quotients[static_cast<std::size_t>(j)] * g.polynomial(j);
  return sum;
}

bool supported_in(const Polynomial& f, const OrderIdeal& o) {
  for (const auto& t : f.terms()) {
    if (!o.contains(t.mono.main_term())) return false;
  }
  return true;
}

}  // namespace

TEST(Prebasis, FromPolynomialsAndBack) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  auto gens = Ps(ctx, {"x^4", "x*y - 2*x^3", "y^3", "x^2*y", "x*y^2", "x^3*y"});
  BorderPrebasis g = BorderPrebasis::from_polynomials(o, gens);
  EXPECT_EQ(up_to_sign(g.polynomials()), up_to_sign(gens));
  EXPECT_EQ(g.coeff(*o.index_of(T(ctx, "x^3")), *o.border_index_of(T(ctx, "x*y"))), P(ctx, "2"));
  EXPECT_EQ(g.domain(), CoefficientDomain::Constant);
  EXPECT_THROW(BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y + x^4", "y^3", "x^2*y", "x*y^2", "x^3*y", "x^4"})),
               Error);
  EXPECT_THROW(BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y", "y^3"})), Error);
}

TEST(MultiplicationMatrices, BorderTermPrebasis) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  MatrixSet a = multiplication_matrices(BorderPrebasis::border_terms(o, ctx));
  ASSERT_EQ(a.size(), 2u);
  for (int k = 0; k < 2; ++k) {
    for (int s = 0; s < o.mu(); ++s) {
      Term next = o.term(s).times_var(k);
      auto r = o.index_of(next);
      for (int row = 0; row < o.mu(); ++row) {
        Rational want = (r && *r == row) ? 1 : 0;
        EXPECT_EQ(a[static_cast<std::size_t>(k)].at(row, s), Polynomial::constant(ctx, want));
      }
    }
  }
  EXPECT_TRUE(is_border_basis(BorderPrebasis::border_terms(o, ctx)));
}

TEST(MultiplicationMatrices, CoefficientColumns) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  BorderPrebasis g =
      BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y - 2*x^3", "y^3", "x*y^2", "x^2*y", "x^3*y", "x^4"}));
  MatrixSet a = multiplication_matrices(g);
  // x * y = xy = b_1
  int s = *o.index_of(T(ctx, "y"));
  std::vector<Polynomial> col = a[0].column(s);
  EXPECT_EQ(col, g.coefficients().column(*o.border_index_of(T(ctx, "x*y"))));
  EXPECT_EQ(col[static_cast<std::size_t>(*o.index_of(T(ctx, "x^3")))], P(ctx, "2"));
}

TEST(BorderBasisCheck, DegreeFormCounterexampleBasis) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  BorderPrebasis g =
      BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y - 2*x^3", "y^3", "x*y^2", "x^2*y", "x^3*y", "x^4"}));
  EXPECT_TRUE(is_border_basis(g));
  EXPECT_TRUE(is_border_basis_by_division(g));
  // The same polynomials generate the ideal given by the other generators.
  EXPECT_TRUE(ideal_equal(g.polynomials(), Ps(ctx, {"x^2*y", "x^3 - 1/2*x*y", "x*y^2", "y^3"}),
                          MonomialOrder::of(TermOrdering::degrevlex())));
}

TEST(BorderBasisCheck, PerturbedCounterexampleBasis) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  BorderPrebasis g =
      BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y - 2*x^3 - x", "y^3", "x*y^2", "x^2*y", "x^3*y", "x^4"}));
  CommutingVerdict v = is_border_basis(g);
  EXPECT_FALSE(v.commuting);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(v.witness->value.is_zero());
  EXPECT_FALSE(is_border_basis_by_division(g));
  GroebnerBasis gb = buchberger(g.polynomials(), TermOrdering::degrevlex());
  EXPECT_LT(quotient_basis(gb).mu(), 6);
}

TEST(BorderDivision, TrivialCases) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  BorderPrebasis g =
      BorderPrebasis::from_polynomials(o, Ps(ctx, {"x*y - 2*x^3", "y^3", "x*y^2", "x^2*y", "x^3*y", "x^4"}));
  DivisionResult d = border_divide(P(ctx, "x^3"), g);
  EXPECT_EQ(d.remainder, P(ctx, "x^3"));
  for (const auto& q : d.quotients) EXPECT_TRUE(q.is_zero());
  int j = *o.border_index_of(T(ctx, "x*y"));
  d = border_divide(P(ctx, "x*y"), g);
  EXPECT_EQ(d.quotients[static_cast<std::size_t>(j)], P(ctx, "1"));
  EXPECT_EQ(d.remainder, P(ctx, "2*x^3"));
}

TEST(BorderDivision, AgreesWithGroebnerNormalForm) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  auto ideal = Ps(ctx, {"-2*x^2 + x*y - y^2 - 1", "8*y^3 + 10*x + 9*y"});
  BorderPrebasis g = border_basis_of_ideal(ideal, o, TermOrdering::degrevlex());
  GroebnerBasis gb = buchberger(ideal, TermOrdering::degrevlex());
  Rng rng(23);
  std::vector<Polynomial> probes = Ps(ctx, {"x^2*y^2", "x^5*y^3 - y", "7"});
  for (int i = 0; i < 30; ++i) probes.push_back(rng.polynomial(ctx, 5, 4));
  for (const auto& f : probes) {
    DivisionResult d = border_divide(f, g);
    EXPECT_TRUE(supported_in(d.remainder, o));
    EXPECT_EQ(recombine(d, g), f);
    EXPECT_EQ(normal_form(d.remainder, gb), normal_form(f, gb));
  }
}

TEST(BorderBasisOfIdeal, Staircase) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  auto ideal = Ps(ctx, {"-2*x^2 + x*y - y^2 - 1", "8*y^3 + 10*x + 9*y"});
  BorderPrebasis g = border_basis_of_ideal(ideal, o, TermOrdering::degrevlex());
  auto want = Ps(ctx, {"x*y - 2*x^2 - y^2 - 1", "y^3 + 5/4*x + 9/8*y", "x*y^2 + 4*x^3 + 3/4*x - 1/8*y",
                       "x^2*y + 2*x^3 - 1/4*x - 1/8*y", "x^3*y - 1/2*x^2 - 1/8*y^2 - 3/32", "x^4 - 1/64"});
  EXPECT_EQ(up_to_sign(g.polynomials()), up_to_sign(want));
  EXPECT_EQ(g.polynomial(*o.border_index_of(T(ctx, "x^4"))), P(ctx, "x^4 - 1/64"));
  EXPECT_TRUE(is_border_basis(g));
  EXPECT_EQ(border_basis_of_ideal(ideal, o, TermOrdering::lex()), g);
  EXPECT_EQ(border_basis_of_ideal(ideal, o, TermOrdering::deglex()), g);
}

TEST(BorderBasisOfIdeal, FivePoints) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = O(ctx, {"1", "x", "x^2", "y", "y^2"});
  auto ideal = Ps(ctx, {"x^2 + x*y - 1/2*y^2 - x - 1/2*y", "y^3 - y", "x*y^2 - x*y"});
  BorderPrebasis g = border_basis_of_ideal(ideal, o, TermOrdering::degrevlex());
  auto want = Ps(ctx, {"x^3 - x", "x^2*y - 1/2*y^2 - 1/2*y", "x*y + x^2 - 1/2*y^2 - x - 1/2*y",
                       "x*y^2 + x^2 - 1/2*y^2 - x - 1/2*y", "y^3 - y"});
  EXPECT_EQ(up_to_sign(g.polynomials()), up_to_sign(want));
  EXPECT_EQ(border_basis_of_ideal(ideal, o, TermOrdering::lex()), g);
}

TEST(BorderBasisOfIdeal, Errors) {
  auto ctx = ring({"x", "y"});
  OrderIdeal o = staircase6(ctx);
  try {
    border_basis_of_ideal(Ps(ctx, {"x^2*y", "x^3", "x*y^2", "y^3"}), o, TermOrdering::degrevlex());
    FAIL() << "expected NotABasis";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotABasis);
  }
  try {
    border_basis_of_ideal(Ps(ctx, {"x^2"}), o, TermOrdering::degrevlex());
    FAIL() << "expected NotZeroDimensional";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotZeroDimensional);
  }
  try {
    border_basis_of_ideal(Ps(ctx, {"x^2", "y"}), o, TermOrdering::degrevlex());
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(BorderBasisOfIdeal, HomogeneousIdealGivesHomogeneousBasis) {
  auto ctx = ring({"x", "y"});
  WeightVector w = WeightVector::standard(2);
  OrderIdeal o = O(ctx, {"1", "x", "x^2", "y", "y^2"});
  auto ideal = Ps(ctx, {"x^3", "x^2*y", "x*y + x^2 - 1/2*y^2", "x*y^2", "y^3"});
  BorderPrebasis g = border_basis_of_ideal(ideal, o, TermOrdering::degrevlex());
  for (const auto& p : g.polynomials()) EXPECT_TRUE(is_homogeneous(p, w)) << p.to_string();
  EXPECT_EQ(up_to_sign(g.polynomials()), up_to_sign(ideal));
}

TEST(BorderBasisProperties, PointIdealsAndPerturbations) {
  Rng rng(101);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.integer(2, 3);
    auto ctx = ring(n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "w"});
    OrderIdeal o = rng.order_ideal(n, rng.integer(1, 3), 3);
    if (o.mu() < 2 || o.mu() > 6) continue;
    auto gens = point_ideal(ctx, random_points(rng, n, o.mu()));
    BorderPrebasis g;
    try {
      g = border_basis_of_ideal(gens, o, TermOrdering::degrevlex());
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::NotABasis);
      continue;
    }
    ASSERT_TRUE(is_border_basis(g));
    ASSERT_TRUE(is_border_basis_by_division(g));
    ++positives;
    EXPECT_TRUE(ideal_equal(g.polynomials(), gens, MonomialOrder::of(TermOrdering::degrevlex())));

    // Remainders are multiplicative.
    for (int probe = 0; probe < 3; ++probe) {
      Polynomial f = rng.polynomial(ctx, 3, 2), h = rng.polynomial(ctx, 3, 2);
      Polynomial rf = border_divide(f, g).remainder, rh = border_divide(h, g).remainder;
      EXPECT_EQ(border_divide(f * h, g).remainder, border_divide(rf * rh, g).remainder);
    }

    PolyMatrix a = g.coefficients();
    int i = rng.integer(0, g.mu() - 1), j = rng.integer(0, g.nu() - 1);
    a.at(i, j) += Polynomial::constant(ctx, rng.nonzero_rational());
    BorderPrebasis bad(o, a);
    bool by_matrices = is_border_basis(bad).commuting;
    bool by_division = is_border_basis_by_division(bad);
    EXPECT_EQ(by_matrices, by_division);
    if (!by_matrices) ++negatives;
  }
  EXPECT_GT(positives, 20);
  EXPECT_GT(negatives, 10);
}

TEST(BorderBasisProperties, RandomPrebasesBothTestsAgree) {
  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    auto ctx = ring({"x", "y"});
    OrderIdeal o = rng.order_ideal(2, 2, 2);
    PolyMatrix a(ctx, o.mu(), o.nu());
    for (int i = 0; i < o.mu(); ++i) {
      for (int j = 0; j < o.nu(); ++j) {
        if (rng.coin(0.3)) a.at(i, j) = Polynomial::constant(ctx, rng.rational(2, 1));
      }
    }
    BorderPrebasis g(o, a);
    EXPECT_EQ(is_border_basis(g).commuting, is_border_basis_by_division(g));
  }
}
