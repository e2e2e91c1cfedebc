#include "test_util.hpp"

namespace modtriple {
namespace {

using namespace modtriple::testing;

TEST(Principal, Identity) { EXPECT_EQ(principal_divisor(map("x")), D("1*P(0) - 1*P(inf)")); }

TEST(Principal, ZerosAndPoles) {
  EXPECT_EQ(principal_divisor(map("x^2+1", "x")), D("1*P(x^2+1) - 1*P(0) - 1*P(inf)"));
}

TEST(Principal, FactoredNumerator) {
  Divisor d = principal_divisor(map("x^2-1"));
  EXPECT_EQ(d, D("1*P(1) + 1*P(-1) - 2*P(inf)"));
  EXPECT_EQ(d.degree(), 0);
}

TEST(Principal, ConstantIsDegenerate) {
  EXPECT_EQ(kind_of([] { principal_divisor(RationalMap::constant(P("P(3)"))); }), ErrorKind::DegenerateInput);
}

TEST(Principal, Multiplicative) {
  RationalMap f = map("x-2", "x^2+1"), g = map("x^3", "x+5");
  RationalMap fg = RationalMap::fraction(f.num() * g.num(), f.den() * g.den());
  EXPECT_EQ(principal_divisor(fg), principal_divisor(f) + principal_divisor(g));
}

TEST(Pullback, RamifiedAtZero) { EXPECT_EQ(pullback_divisor(map("x^2"), D("1*P(0)")), D("2*P(0)")); }

TEST(Pullback, SplitsOverOne) {
  EXPECT_EQ(pullback_divisor(map("x^2"), D("1*P(x-1)")), D("1*P(x-1) + 1*P(x+1)"));
}

TEST(Pullback, AtInfinity) { EXPECT_EQ(pullback_divisor(map("x^2"), D("1*P(inf)")), D("2*P(inf)")); }

TEST(Pullback, DegreeMultiplies) {
  RationalMap f = map("x^3-x", "2*x^2+1");
  Divisor d = D("2*P(x^2+x+1) - 1*P(inf) + 3*P(1/2)");
  EXPECT_EQ(pullback_divisor(f, d).degree(), 3 * d.degree());
}

TEST(PointImage, Rational) { EXPECT_EQ(point_image(map("x^2"), P("P(x-2)")), P("P(4)")); }

TEST(PointImage, QuadraticPoint) { EXPECT_EQ(point_image(map("x^2"), P("P(x^2-2)")), P("P(x-2)")); }

TEST(PointImage, ConstantMap) {
  EXPECT_EQ(point_image(RationalMap::constant(ClosedPoint::infinity()), P("P(x-5)")), ClosedPoint::infinity());
}

TEST(PointImage, CompatibleWithComposition) {
  RationalMap f = map("x^2+1", "x"), g = map("x-1", "x+2");
  for (const char* s : {"P(x^2+x+1)", "P(3)", "P(inf)", "P(0)"}) {
    EXPECT_EQ(point_image(g, point_image(f, P(s))), point_image(compose_maps(g, f), P(s))) << s;
  }
}

TEST(Pushforward, ResidueDegreeOne) { EXPECT_EQ(pushforward_divisor(map("x^2"), D("1*P(x-1)")), D("1*P(x-1)")); }

TEST(Pushforward, ResidueDegreeTwo) {
  EXPECT_EQ(pushforward_divisor(map("x^2"), D("1*P(x^2-2)")), D("2*P(x-2)"));
}

TEST(Pushforward, ProjectionFormula) {
  RationalMap f = map("x^2");
  EXPECT_EQ(pushforward_divisor(f, pullback_divisor(f, D("1*P(x-1)"))), D("2*P(x-1)"));
}

TEST(MinDivisor, CommonPart) { EXPECT_EQ(min_divisor(D("2*P(0) + 1*P(1)"), D("1*P(0) + 3*P(inf)")), D("1*P(0)")); }

TEST(MinDivisor, ZeroAbsorbs) { EXPECT_EQ(min_divisor(D("2*P(0) + 1*P(1)"), Divisor()), Divisor()); }

TEST(MinDivisor, SameSupport) { EXPECT_EQ(min_divisor(D("2*P(0)"), D("3*P(0)")), D("2*P(0)")); }

TEST(MinDivisor, RejectsSignedInput) {
  EXPECT_EQ(kind_of([] { min_divisor(D("1*P(0) - 1*P(1)"), D("1*P(0)")); }), ErrorKind::NotEffective);
}

TEST(Order, LeqHolds) {
  OrderReport r = divisor_order(D("1*P(0)"), D("2*P(0) + 1*P(1)"));
  EXPECT_TRUE(r.leq);
  EXPECT_FALSE(r.equal);
  EXPECT_TRUE(r.effective);
}

TEST(Order, SignedIsNotEffective) { EXPECT_FALSE(divisor_order(D("1*P(0) - 1*P(1)"), Divisor()).effective); }

TEST(Order, ReducedPart) {
  OrderReport r = divisor_order(D("3*P(0) + 2*P(inf)"), Divisor());
  EXPECT_EQ(r.reduced, D("1*P(0) + 1*P(inf)"));
  EXPECT_EQ(r.support, pts({"P(0)", "P(inf)"}));
}

TEST(CanonicalSplit, ZeroMinusPole) {
  auto [plus, minus] = canonical_split(D("1*P(0) - 1*P(inf)"));
  EXPECT_EQ(plus, D("1*P(0)"));
  EXPECT_EQ(minus, D("1*P(inf)"));
}

TEST(CanonicalSplit, Zero) {
  auto [plus, minus] = canonical_split(Divisor());
  EXPECT_TRUE(plus.is_zero());
  EXPECT_TRUE(minus.is_zero());
}

TEST(CanonicalSplit, CancelsFirst) {
  auto [plus, minus] = canonical_split(D("2*P(0) - 3*P(0)"));
  EXPECT_TRUE(plus.is_zero());
  EXPECT_EQ(minus, D("1*P(0)"));
}

TEST(PointText, Shorthand) {
  EXPECT_EQ(P("P(3)"), P("P(x-3)"));
  EXPECT_EQ(P("P(inf)"), ClosedPoint::infinity());
  EXPECT_EQ(P("P(2*x^2+2)"), P("P(x^2+1)"));
}

TEST(PointText, ReducibleIsRejected) {
  EXPECT_EQ(kind_of([] { parse_point("P(x^2-1)"); }), ErrorKind::SemanticError);
}

TEST(DivisorText, SignedSum) {
  Divisor d = D("2*P(x^2+1) - 1*P(0)");
  EXPECT_EQ(d.at(P("P(x^2+1)")), 2);
  EXPECT_EQ(d.at(P("P(0)")), -1);
  EXPECT_EQ(d.entries().size(), 2u);
  EXPECT_EQ(D(d.to_string().c_str()), d);
}

}  // namespace
}  // namespace modtriple
