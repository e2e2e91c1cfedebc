#include "test_util.hpp"

#include "modtriple/functors.hpp"

namespace modtriple {
namespace {

using namespace modtriple::testing;

ModulusPair pair(const char* inf) { return ModulusPair::make(CurveSpace::proper(), D(inf)); }

TEST(Lambda, EmptyDivisors) {
  EXPECT_EQ(lambda_embed(CurveSpace::proper()), T("0", "0"));
  EXPECT_TRUE(omega_forget(lambda_embed(CurveSpace::proper())).is_proper());
}

TEST(Lambda, SquareIntoMinusOnly) {
  Transport r = lambda_adjunction_member(graph_unchecked(map("x^2"), T("0", "0"), T("0", "1*P(0)")));
  EXPECT_TRUE(r.left);
  EXPECT_TRUE(r.right);
}

TEST(Lambda, InteriorViolationRejectedOnBothSides) {
  Transport r = lambda_adjunction_member(graph_unchecked(map("x"), T("0", "0"), T("1*P(inf)", "0")));
  EXPECT_FALSE(r.left);
  EXPECT_FALSE(r.right);
}

TEST(PLeft, DropsSummandsWithMinus) {
  std::vector<ModulusPair> p = p_left({T("1*P(inf)", "1*P(0)"), T("1*P(inf)", "0")});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0], pair("1*P(inf)"));
}

TEST(QRight, ForgetsMinus) { EXPECT_EQ(q_right(T("1*P(0)", "1*P(inf)")), pair("1*P(0)")); }

TEST(QRight, NeedsDisjoint) {
  EXPECT_EQ(kind_of([] { q_right(T("1*P(0)", "1*P(0)")); }), ErrorKind::NotDisjoint);
}

TEST(QRight, SquareMembershipBothHold) {
  ModulusPair m = pair("2*P(inf)");
  ModulusTriple t = T("1*P(inf)", "1*P(0)");
  Cycle c = graph_unchecked(map("x^2"), phi_embed(m), t);
  Transport r = q_transport(c, m);
  EXPECT_TRUE(r.left);
  EXPECT_TRUE(r.right);
  EXPECT_TRUE(mcor_admissible(c.components, m, q_right(t)));
}

TEST(PTransport, EmptyHomWhenEveryMinusIsNonzero) {
  ModulusPair m = pair("1*P(inf)");
  TripleSum sum{T("1*P(inf)", "1*P(0)")};
  std::vector<Cycle> parts{graph_unchecked(RationalMap::identity(), sum[0], phi_embed(m))};
  EXPECT_TRUE(p_left(sum).empty());
  Transport r = p_transport(sum, parts, m);
  EXPECT_FALSE(r.left);
  EXPECT_FALSE(r.right);
}

TEST(SeparationAdjoint, RemovesFundamental) {
  EXPECT_EQ(separation_adjoint(T("2*P(0)", "1*P(0)")), T("1*P(0)", "0"));
}

TEST(SeparationAdjoint, IdentityCandidateAgrees) {
  ModulusTriple t = T("2*P(0)", "1*P(0)"), s = T("1*P(0)", "1*P(inf)");
  Cycle c = graph_unchecked(RationalMap::identity(), t, s);
  Transport r = s_transport(c);
  EXPECT_TRUE(r.left);
  EXPECT_TRUE(r.right);
  Cycle ext = extend_correspondence(c);
  EXPECT_EQ(ext.source, T("1*P(0)", "0"));
  EXPECT_TRUE(is_admissible(ext));
}

TEST(GShrink, MinusMovesToBoundary) {
  EXPECT_EQ(g_shrink(T("1*P(inf)", "1*P(0)")), T_open({"P(0)"}, "1*P(inf)", "0"));
}

TEST(GShrink, EmptyMinusUnchanged) { EXPECT_EQ(g_shrink(T("1*P(inf)", "0")), T("1*P(inf)", "0")); }

TEST(GShrink, RefusesVeryGoodButNotExcellent) {
  ModulusPair m = pair("1*P(inf)");
  Cycle id = graph_cycle(RationalMap::identity(), phi_embed(m), T("0", "1*P(inf)"));
  EXPECT_EQ(kind_of([&] { g_adjunction_member(id, m); }), ErrorKind::NotExcellent);
}

TEST(GShrink, ExcellentCandidateAgrees) {
  // the point over |T-| lies on the boundary of the source, so the position is excellent
  ModulusPair m = ModulusPair::make(CurveSpace::open(pts({"P(0)"})), D("2*P(inf)"));
  ModulusTriple t = T("1*P(inf)", "1*P(0)");
  Transport r = g_adjunction_member(graph_unchecked(RationalMap::identity(), phi_embed(m), t), m);
  EXPECT_TRUE(r.left);
  EXPECT_TRUE(r.right);
  EXPECT_EQ(g_shrink_pair(t), ModulusPair::make(CurveSpace::open(pts({"P(0)"})), D("1*P(inf)")));
}

TEST(IY, KappaAndInverse) {
  IYObject o = IYObject::make(D("1*P(0)"), D("2*P(inf)"));
  ModulusTriple t = iy_to_triple(o);
  EXPECT_EQ(t, T("2*P(inf)", "1*P(0) + 1*P(inf)"));
  EXPECT_EQ(triple_to_iy(t), o);
}

TEST(IY, SquareMorphismMatchesAdmissibility) {
  IYObject o1 = IYObject::make(D("1*P(0)"), D("2*P(inf)"));
  IYObject o2 = IYObject::make(D("1*P(0)"), D("1*P(inf)"));
  EXPECT_TRUE(is_iy_morphism(map("x^2"), o1, o2));
  EXPECT_TRUE(is_admissible(graph_unchecked(map("x^2"), iy_to_triple(o1), iy_to_triple(o2))));
}

TEST(IY, NonMinClassRejected) {
  EXPECT_EQ(kind_of([] { triple_to_iy(T("1*P(0)", "2*P(0)")); }), ErrorKind::NotMinClass);
}

TEST(Mlog, KappaAndInverse) {
  MlogObject o = MlogObject::make(D("1*P(inf)"), D("2*P(0)"));
  ModulusTriple t = mlog_to_triple(o);
  EXPECT_EQ(t, T("1*P(inf)", "2*P(0) + 1*P(inf)"));
  EXPECT_EQ(triple_to_mlog(t), o);
}

TEST(Mlog, ConstantIntoModulusNeedsNothingElse) {
  MlogObject o1 = MlogObject::make(D("1*P(inf)"), D("3*P(1)"));
  MlogObject o2 = MlogObject::make(D("1*P(inf)"), D("1*P(0)"));
  EXPECT_TRUE(is_mlog_morphism(RationalMap::constant(P("P(0)")), o1, o2));
}

TEST(Mlog, ModulusTooLarge) {
  MlogObject o1 = MlogObject::make(Divisor(), D("2*P(0)"));
  MlogObject o2 = MlogObject::make(Divisor(), D("1*P(0)"));
  EXPECT_FALSE(is_mlog_morphism(RationalMap::identity(), o1, o2));
}

TEST(Ne, SignedDivisorEmbedding) {
  ModulusTriple t = ne_embed(NePair{D("1*P(0) - 1*P(inf)")});
  EXPECT_EQ(t, T("1*P(0) + 1*P(inf)", "2*P(inf)"));
  EXPECT_TRUE(classify(t).saturated);
}

TEST(Ne, EffectiveDivisorEmbedding) {
  EXPECT_EQ(ne_embed(mcor_embed(pair("2*P(x^2+1)"))), T("2*P(x^2+1)", "0"));
}

TEST(Ne, PullbackSupportIsPreimage) {
  RationalMap f = map("x^2");
  Divisor d = D("1*P(0) - 1*P(inf)");
  EXPECT_EQ(pullback_divisor(f, d).support(), preimage(f, d.support()).points);
  EXPECT_EQ(pullback_divisor(f, d).support(), pts({"P(0)", "P(inf)"}));
}

TEST(Ne, HomMatchesEmbeddedAdmissibility) {
  NePair x{D("2*P(inf) - 1*P(0)")}, y{D("1*P(inf) - 1*P(0)")};
  Cycle c = graph_unchecked(RationalMap::identity(), ne_embed(x), ne_embed(y));
  EXPECT_EQ(ne_hom_member(c.components, x, y), is_admissible(c));
}

TEST(Compactify, IdentityNeedsOne) {
  ModulusTriple t = T_open({"P(inf)"}, "0", "0"), s = T("1*P(inf)", "0");
  EXPECT_EQ(minimal_compactification_level(t, s, graph_cycle(map("x"), t, s)), 1);
}

TEST(Compactify, SquareNeedsTwo) {
  ModulusTriple t = T_open({"P(inf)"}, "0", "0"), s = T("1*P(inf)", "0");
  Cycle a = graph_cycle(map("x^2"), t, s);
  EXPECT_EQ(minimal_compactification_level(t, s, a), 2);
  EXPECT_FALSE(admissible_at_level(a, 1));
  EXPECT_TRUE(admissible_at_level(a, 3));
}

TEST(Compactify, ConstantNeedsBoundaryOnly) {
  ModulusTriple t = T_open({"P(inf)"}, "0", "0"), s = T("1*P(inf)", "0");
  Cycle a = graph_cycle(RationalMap::constant(P("P(0)")), t, s);
  EXPECT_EQ(minimal_compactification_level(t, s, a), 1);
}

TEST(Compactify, StageIsCompactification) {
  ModulusTriple t = T_open({"P(inf)"}, "1*P(0)", "1*P(1)");
  ModulusTriple stage = compactification_stage(t, 2);
  EXPECT_EQ(stage, T("1*P(0) + 2*P(inf)", "1*P(1)"));
  EXPECT_TRUE(is_comp_object({t, stage, D("2*P(inf)")}));
  EXPECT_FALSE(is_comp_object({t, stage, D("1*P(0)")}));
}

}  // namespace
}  // namespace modtriple
