#include <gtest/gtest.h>

#include "bbs/error.hpp"
#include "bbs/grading.hpp"
#include "bbs/poly_matrix.hpp"
#include "test_support.hpp"

using namespace bbs;
using namespace bbs::testing;

TEST(Rational, CanonicalForm) {
  Rational a = parse_rational("-6/4");
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  Rational z = parse_rational("0/7");
  EXPECT_EQ(z.get_num(), 0);
  EXPECT_EQ(z.get_den(), 1);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(Parser, TwoMonomials) {
  auto ctx = ring({"x", "y"});
  Polynomial f = P(ctx, "x^2*y - 1/2*y^2");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0].coeff, 1);
  EXPECT_EQ(f.terms()[1].coeff, Rational(-1, 2));
  EXPECT_EQ(f.to_string(), "x^2*y - 1/2*y^2");
}

TEST(Parser, Zero) {
  auto ctx = ring({"x", "y"});
  EXPECT_TRUE(P(ctx, "0").is_zero());
  EXPECT_EQ(P(ctx, "0").to_string(), "0");
  EXPECT_TRUE(P(ctx, "x - x").is_zero());
}

TEST(Parser, ThreeMonomials) {
  auto ctx = ring({"x", "y"});
  Polynomial f = P(ctx, "y^3 + 5/4*x + 9/8*y");
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.to_string(), "y^3 + 5/4*x + 9/8*y");
}

TEST(Parser, JuxtapositionAndSplitting) {
  auto ctx = ring({"x", "y"});
  EXPECT_EQ(P(ctx, "2 x y^2"), P(ctx, "2*x*y^2"));
  EXPECT_EQ(P(ctx, "xy^2"), P(ctx, "x*y^2"));
  EXPECT_EQ(P(ctx, "x^2y"), P(ctx, "x^2*y"));
  EXPECT_EQ(P(ctx, "-(x + y)^2"), P(ctx, "-x^2 - 2*x*y - y^2"));
  auto ctx2 = VariableContext::make({"x", "xy"});
  EXPECT_EQ(P(ctx2, "xy").size(), 1u);
  EXPECT_EQ(P(ctx2, "xy").leading().mono.exponent({VarKind::Main, 1}), 1);
}

TEST(Parser, ErrorsCarryPositions) {
  auto ctx = ring({"x", "y"});
  try {
    P(ctx, "x +\n  * y");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  try {
    P(ctx, "x + w");
    FAIL() << "expected an unknown variable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
  }
  EXPECT_THROW(P(ctx, "x^"), ParseError);
  EXPECT_THROW(P(ctx, "(x + y"), ParseError);
  EXPECT_THROW(P(ctx, "1/0"), ParseError);
}

TEST(Arithmetic, Identities) {
  auto ctx = ring({"x", "y"});
  Polynomial f = P(ctx, "x^3 - 2*x*y + 7");
  EXPECT_EQ(poly_arith(f, P(ctx, "0"), ArithOp::Add), f);
  EXPECT_EQ(poly_arith(P(ctx, "x + y"), P(ctx, "x - y"), ArithOp::Mul), P(ctx, "x^2 - y^2"));
  Polynomial g = P(ctx, "y^2 + x - 1");
  EXPECT_EQ((f * g).main_degree(), f.main_degree() + g.main_degree());
  EXPECT_THROW(poly_arith(f, P(ring({"x", "w"}), "x"), ArithOp::Add), Error);
}

TEST(Arithmetic, RingAxiomsOnRandomPolynomials) {
  auto ctx = VariableContext::make({"x", "y"}, {"c", "d"}, "z");
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = rng.polynomial(ctx), b = rng.polynomial(ctx), c = rng.polynomial(ctx);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto& t : (a * b).terms()) EXPECT_NE(t.coeff, 0);
  }
}

TEST(Printing, RoundTripOnRandomPolynomials) {
  auto ctx = VariableContext::make({"x", "y", "w"}, {"c1", "c2"}, "z");
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    Polynomial f = rng.polynomial(ctx, 6, 3);
    std::string text = f.to_string();
    Polynomial g = P(ctx, text);
    ASSERT_EQ(g, f) << text;
    ASSERT_EQ(g.to_string(), text);
  }
}

TEST(Printing, CanonicalOrderIsDegrevlexFirst) {
  auto ctx = ring({"x", "y", "z"});
  EXPECT_EQ(P(ctx, "z^2 + x*z + y^2 + x*y + x^2").to_string(), "x^2 + x*y + y^2 + x*z + z^2");
  EXPECT_EQ(P(ctx, "1 + x + x^2").to_string(), "x^2 + x + 1");
}

TEST(Substitute, Evaluation) {
  auto ctx = VariableContext::make({"x"}, {"c11"});
  Polynomial f = P(ctx, "c11*x");
  Polynomial three = Polynomial::constant(ctx, 3);
  EXPECT_EQ(substitute(f, {{*ctx->find("c11"), three}}), P(ctx, "3*x"));
  EXPECT_EQ(substitute(f, {}), f);
  EXPECT_EQ(substitute(f, {{*ctx->find("x"), Polynomial::variable(ctx, "x")}}), f);
}

TEST(Substitute, MissingTargetVariable) {
  auto src = VariableContext::make({"x", "y"});
  auto dst = VariableContext::make({"x"});
  Polynomial f = P(src, "x*y");
  EXPECT_THROW(substitute(f, {}, dst), Error);
  EXPECT_EQ(substitute(f, {{*src->find("y"), Polynomial::constant(dst, 2)}}, dst), P(dst, "2*x"));
}

TEST(Grading, DegreeForm) {
  auto ctx = ring({"x", "y"});
  WeightVector w11 = WeightVector::standard(2);
  Polynomial f = P(ctx, "-2*x^2 + x*y - y^2 - 1");
  EXPECT_EQ(degree_w(f, w11), 2);
  EXPECT_EQ(degree_form(f, w11), P(ctx, "-2*x^2 + x*y - y^2"));
  Polynomial h = P(ctx, "x^2*y - 3*y^3");
  EXPECT_EQ(degree_form(h, w11), h);
  WeightVector w12({1, 2});
  Polynomial g = P(ctx, "x^3 - x*y");
  EXPECT_EQ(degree_w(g, w12), 3);
  EXPECT_EQ(degree_form(g, w12), g);
  EXPECT_THROW(degree_form(P(ctx, "0"), w11), Error);
}

TEST(Grading, ParametersHaveDegreeZero) {
  auto ctx = VariableContext::make({"x", "y"}, {"c"}, "z");
  WeightVector w = WeightVector::standard(2);
  EXPECT_EQ(degree_w(P(ctx, "c^5*z^3*x + y^2"), w), 2);
  EXPECT_EQ(degree_form(P(ctx, "c^5*z^3*x + y"), w), P(ctx, "c^5*z^3*x + y"));
}

TEST(Grading, Homogenize) {
  auto ctx = ring({"x", "y"}, "x0");
  WeightVector w = WeightVector::standard(2);
  Polynomial h = P(ctx, "x^2*y - 5*y^3");
  EXPECT_EQ(homogenize(h, w), h);
  EXPECT_EQ(homogenize(P(ctx, "x^2 - x"), w), P(ctx, "x^2 - x*x0"));
  EXPECT_EQ(homogenize(P(ctx, "x^2*y - 1/2*y^2 - 1/2*y"), w), P(ctx, "x^2*y - 1/2*y^2*x0 - 1/2*y*x0^2"));
  EXPECT_THROW(homogenize(P(ctx, "0"), w), Error);
  EXPECT_THROW(homogenize(P(ring({"x"}), "x + 1"), WeightVector::standard(1)), Error);
}

TEST(Grading, DegreeFormAndHomogenizationProperties) {
  auto ctx = ring({"x", "y", "w"}, "x0");
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial f = rng.polynomial(ctx, 5, 3);
    if (f.is_zero()) continue;
    f = substitute(f, {{VarRef{VarKind::Deform, 0}, Polynomial::constant(ctx, 1)}});
    if (f.is_zero()) continue;
    WeightVector w({rng.integer(1, 3), rng.integer(1, 3), rng.integer(1, 3)});
    Polynomial rest = f - degree_form(f, w);
    EXPECT_TRUE(rest.is_zero() || degree_w(rest, w) < degree_w(f, w));
    Polynomial fh = homogenize(f, w);
    EXPECT_EQ(dehomogenize(fh), f);
    // homogeneous for (1, W) with x0 of degree 1
    int d = -1;
    for (const auto& t : fh.terms()) {
      int e = w.degree(t.mono.main()) + t.mono.deform();
      if (d >= 0) EXPECT_EQ(e, d);
      d = e;
    }
  }
}

TEST(PolyMatrix, ProductAndCommutator) {
  auto ctx = ring({"x"});
  PolyMatrix a(ctx, 2, 2), b(ctx, 2, 2);
  a.at(0, 1) = P(ctx, "1");
  b.at(1, 0) = P(ctx, "1");
  PolyMatrix ab = a * b;
  EXPECT_EQ(ab.at(0, 0), P(ctx, "1"));
  EXPECT_TRUE(ab.at(1, 1).is_zero());
  EXPECT_FALSE((a * b - b * a).is_zero());
  EXPECT_TRUE((a * PolyMatrix::identity(ctx, 2) - a).is_zero());
}
