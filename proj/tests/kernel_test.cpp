#include <gtest/gtest.h>

#include "modtriple/app/oracles.hpp"
#include "modtriple/error.hpp"
#include "modtriple/poly.hpp"

namespace modtriple {
namespace {

Poly p(const char* s) { return parse_poly(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Gcd, SharedRoot) { EXPECT_EQ(poly_gcd(p("x^2-1"), p("x-1")), p("x-1")); }

TEST(Gcd, CoprimeLinears) { EXPECT_EQ(poly_gcd(p("x"), p("x+1")), Poly(1L)); }

TEST(Gcd, AgreesWithHandEuclid) {
  // x^4-1 = (x^2+1)(x^2-1) + 0, so the last nonzero remainder is x^2-1
  DivMod step = divmod(p("x^4-1"), p("x^2-1"));
  EXPECT_EQ(step.quot, p("x^2+1"));
  EXPECT_TRUE(step.rem.is_zero());
  EXPECT_EQ(poly_gcd(p("x^4-1"), p("x^2-1")), p("x^2-1"));
  EXPECT_EQ(oracle::euclid_gcd(p("x^4-1"), p("x^2-1")), p("x^2-1"));
}

TEST(Gcd, ScalesWithCommonFactor) {
  Poly a = p("x^3+2*x-7"), b = p("(1/3)*x^2-x+5"), c = p("2*x^2+x-1");
  EXPECT_EQ(poly_gcd(a * c, b * c), (poly_gcd(a, b) * c).monic());
}

TEST(Gcd, BothZeroIsDegenerate) {
  EXPECT_EQ(kind_of([] { poly_gcd(Poly(), Poly()); }), ErrorKind::DegenerateInput);
}

TEST(Squarefree, MixedMultiplicities) {
  auto parts = squarefree_decomposition(p("x^3-x^2"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], std::make_pair(1, p("x-1")));
  EXPECT_EQ(parts[1], std::make_pair(2, p("x")));
}

TEST(Squarefree, AlreadySquarefree) {
  auto parts = squarefree_decomposition(p("x^2+1"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], std::make_pair(1, p("x^2+1")));
}

TEST(Squarefree, SquareOfProduct) {
  Poly q = p("(x-1)*(x+2)");
  Poly in = q * q;
  auto parts = squarefree_decomposition(in);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], std::make_pair(2, q));
  // in / gcd(in, in') is the radical
  EXPECT_EQ((in / oracle::euclid_gcd(in, in.derivative())).monic(), q);
}

TEST(Squarefree, ZeroIsDegenerate) {
  EXPECT_EQ(kind_of([] { squarefree_decomposition(Poly()); }), ErrorKind::DegenerateInput);
}

TEST(Factor, RationalRoots) {
  FactoredPoly f = factor(p("x^2-1"));
  EXPECT_EQ(f.unit, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], std::make_pair(p("x-1"), 1));
  EXPECT_EQ(f.factors[1], std::make_pair(p("x+1"), 1));
}

TEST(Factor, IrreducibleQuadratic) {
  FactoredPoly f = factor(p("x^2+1"));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0], std::make_pair(p("x^2+1"), 1));
}

TEST(Factor, SophieGermain) {
  FactoredPoly f = factor(p("x^4+4"));
  EXPECT_EQ(f.unit, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, p("x^2-2*x+2"));
  EXPECT_EQ(f.factors[1].first, p("x^2+2*x+2"));
  EXPECT_EQ(p("x^2-2*x+2") * p("x^2+2*x+2"), p("x^4+4"));
  for (const auto& [g, m] : f.factors) EXPECT_TRUE(oracle::irreducible_upto6(g));
}

TEST(Factor, UnitAndMultiplicities) {
  Poly in = Rat(-3, 2) * p("(x^2+x+1)^2*(x-1/2)");
  FactoredPoly f = factor(in);
  EXPECT_EQ(f.unit, Rat(-3, 2));
  EXPECT_EQ(f.expand(), in);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], std::make_pair(p("x-1/2"), 1));
  EXPECT_EQ(f.factors[1], std::make_pair(p("x^2+x+1"), 2));
}

TEST(Factor, ZeroIsDegenerate) { EXPECT_EQ(kind_of([] { factor(Poly()); }), ErrorKind::DegenerateInput); }

TEST(Resultant, ProductFormula) {
  // roots of x^2+1 are i, -i: (i-2)(-i-2) = 5
  EXPECT_EQ(resultant(p("x^2+1"), p("x-2")), 5);
}

TEST(Resultant, CommonFactor) { EXPECT_EQ(resultant(p("x-1"), p("x-1")), 0); }

TEST(Resultant, Linears) { EXPECT_EQ(resultant(p("x-1"), p("x-3")), -2); }

TEST(Resultant, SwapSign) {
  Poly a = p("2*x^3-x+4"), b = p("x^2+3*x-1/2"), c = p("3*x+1");
  EXPECT_EQ(resultant(a, b), resultant(b, a));   // 3*2 even
  EXPECT_EQ(resultant(a, c), -resultant(c, a));  // 3*1 odd
}

TEST(Oracle, KnownCases) {
  EXPECT_TRUE(oracle::irreducible_upto6(p("x^4+1")));
  EXPECT_TRUE(oracle::irreducible_upto6(p("x^6+x^3+1")));
  EXPECT_FALSE(oracle::irreducible_upto6(p("x^4+4")));
  EXPECT_FALSE(oracle::irreducible_upto6(p("(x^2+1)*(x^3+x+1)")));
  EXPECT_FALSE(oracle::irreducible_upto6(p("(x^3-2)*(x^3+3)")));
  EXPECT_TRUE(oracle::irreducible_upto6(p("x^5-x-1")));
}

TEST(PolyText, CanonicalRoundTrip) {
  for (const char* s : {"x^2 - 1", "(1/2)*x^3 + 2*x", "-x^4+x/3-7", "0", "5"}) {
    Poly q = p(s);
    EXPECT_EQ(parse_poly(q.to_string()), q) << s;
  }
}

TEST(PolyText, SyntaxErrorIsParseError) {
  EXPECT_EQ(kind_of([] { parse_poly("x^^2"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_poly("y+1"); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace modtriple
