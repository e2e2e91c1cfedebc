#include "test_util.hpp"

namespace modtriple {
namespace {

using namespace modtriple::testing;

TEST(Interior, RemovesPlus) { EXPECT_EQ(interior(T("1*P(inf)", "0")), CurveSpace::open(pts({"P(inf)"}))); }

TEST(Interior, MinusOnlyStaysProper) { EXPECT_TRUE(interior(T("0", "1*P(inf)")).is_proper()); }

TEST(Interior, AddsToBoundary) {
  EXPECT_EQ(interior(T_open({"P(1)"}, "1*P(0)", "0")), CurveSpace::open(pts({"P(0)", "P(1)"})));
}

TEST(Dual, Swaps) { EXPECT_EQ(dual(T("1*P(inf)", "0")), T("0", "1*P(inf)")); }

TEST(Dual, SymmetricFixed) { EXPECT_EQ(dual(T("1*P(0)", "1*P(0)")), T("1*P(0)", "1*P(0)")); }

TEST(Dual, Involution) {
  ModulusTriple t = T_open({"P(x^2+1)"}, "2*P(0) + 1*P(inf)", "1*P(0) + 3*P(1/2)");
  EXPECT_EQ(dual(dual(t)), t);
}

TEST(Separation, PointwiseMin) {
  Separation s = separation(T("2*P(0) + 1*P(1)", "1*P(0)"));
  EXPECT_EQ(s.triple, T("1*P(0) + 1*P(1)", "0"));
  EXPECT_EQ(s.fundamental, D("1*P(0)"));
}

TEST(Separation, DisjointUnchanged) {
  Separation s = separation(T("1*P(0)", "1*P(inf)"));
  EXPECT_EQ(s.triple, T("1*P(0)", "1*P(inf)"));
  EXPECT_TRUE(s.fundamental.is_zero());
}

TEST(Separation, CancelsCompletely) {
  Separation s = separation(T("1*P(0)", "1*P(0)"));
  EXPECT_EQ(s.triple, T("0", "0"));
  EXPECT_EQ(s.fundamental, D("1*P(0)"));
}

TEST(Classify, CompactifiedLine) {
  ClassReport c = classify(T("1*P(inf)", "0"));
  EXPECT_TRUE(c.disjoint);
  EXPECT_TRUE(c.saturated);
  EXPECT_TRUE(c.modulus_pair);
  EXPECT_TRUE(c.proper);
}

TEST(Classify, MinClassNotSaturated) {
  ClassReport c = classify(T("1*P(0)", "1*P(0) + 1*P(1)"));
  EXPECT_FALSE(c.saturated);
  EXPECT_TRUE(c.min_class);
}

TEST(Classify, OverlapNotMinClass) {
  ClassReport c = classify(T("1*P(0)", "2*P(0)"));
  EXPECT_FALSE(c.disjoint);
  EXPECT_FALSE(c.min_class);
}

TEST(ModulusCondition, IdentityIntoDual) {
  CheckedMap m{std::nullopt, RationalMap::identity(), RationalMap::identity()};
  EXPECT_TRUE(modulus_condition(m, {T("1*P(inf)", "0"), T("0", "1*P(inf)")}));
}

TEST(ModulusCondition, ShiftedIdentity) {
  CheckedMap m{std::nullopt, RationalMap::identity(), RationalMap::identity()};
  EXPECT_TRUE(modulus_condition(m, {T("2*P(inf)", "1*P(inf)"), T("1*P(inf)", "0")}));
}

TEST(ModulusCondition, SquareTooRamified) {
  CheckedMap m{std::nullopt, RationalMap::identity(), map("x^2")};
  EXPECT_FALSE(modulus_condition(m, {T("1*P(inf)", "0"), T("1*P(inf)", "0")}));
}

TEST(ModulusConditionPoint, CancelledMinus) { EXPECT_TRUE(modulus_condition_point(P("P(0)"), T("1*P(0)", "1*P(0)"))); }

TEST(ModulusConditionPoint, MinusOffPlus) { EXPECT_FALSE(modulus_condition_point(P("P(1)"), T("1*P(0)", "1*P(1)"))); }

TEST(ModulusConditionPoint, MinusExceedsPlus) {
  EXPECT_FALSE(modulus_condition_point(P("P(inf)"), T("1*P(inf)", "2*P(inf)")));
}

TEST(PullbackTriple, Square) {
  EXPECT_EQ(pullback_triple(map("x^2"), T("1*P(inf)", "1*P(0)")), T("2*P(inf)", "2*P(0)"));
}

TEST(PullbackTriple, Identity) {
  ModulusTriple t = T("3*P(x^2+1) + 1*P(inf)", "2*P(1/2)");
  EXPECT_EQ(pullback_triple(RationalMap::identity(), t), t);
}

TEST(PullbackTriple, SplitsPlus) {
  EXPECT_EQ(pullback_triple(map("x^2"), T("1*P(x-1)", "0")), T("1*P(x-1) + 1*P(x+1)", "0"));
}

TEST(Shift, IsoWhenInsidePlus) {
  ShiftMorphism s = shift_morphism(T("1*P(inf)", "0"), D("1*P(inf)"));
  EXPECT_TRUE(s.is_iso);
  EXPECT_TRUE(s.reverse_admissible);
  EXPECT_EQ(s.forward.source, T("2*P(inf)", "1*P(inf)"));
  EXPECT_TRUE(is_admissible(s.forward));
}

TEST(Shift, NotIsoOffPlus) { EXPECT_FALSE(shift_morphism(T("1*P(inf)", "0"), D("1*P(0)")).is_iso); }

TEST(Shift, ZeroShiftIsIdentity) {
  ModulusTriple t = T("1*P(0)", "1*P(1)");
  ShiftMorphism s = shift_morphism(t, Divisor());
  EXPECT_TRUE(s.is_iso);
  EXPECT_EQ(s.forward.source, t);
  EXPECT_EQ(s.forward, graph_cycle(RationalMap::identity(), t, t));
}

TEST(TripleMake, RejectsSignedPlus) {
  EXPECT_EQ(kind_of([] { ModulusTriple::proper(D("1*P(0) - 1*P(1)"), Divisor()); }), ErrorKind::NotEffective);
}

}  // namespace
}  // namespace modtriple
