#include "test_util.hpp"

namespace modtriple {
namespace {

using namespace modtriple::testing;

const ModulusTriple kBox = T("1*P(inf)", "0");       // (P1, inf, 0)
const ModulusTriple kBoxDual = T("0", "1*P(inf)");   // (P1, 0, inf)
const ModulusTriple kShifted = T("2*P(inf)", "1*P(inf)");

Cycle identity(const ModulusTriple& s, const ModulusTriple& t) { return graph_cycle(RationalMap::identity(), s, t); }

TEST(Graph, IdentityIntoDual) {
  Cycle g = identity(kBox, kBoxDual);
  ASSERT_EQ(g.components.size(), 1u);
  EXPECT_TRUE(g.components[0].is_graph());
  EXPECT_TRUE(g.components[0].b.is_identity());
  EXPECT_EQ(g.source, kBox);
  EXPECT_EQ(g.target, kBoxDual);
}

TEST(Graph, SquareIsAdmissible) {
  Cycle g = graph_cycle(map("x^2"), T("2*P(inf)", "0"), kBox);
  EXPECT_EQ(g.components[0].b, map("x^2"));
  EXPECT_TRUE(is_admissible(g));
}

TEST(Graph, InversionSwapsZeroAndInfinity) {
  Cycle g = graph_cycle(map("1", "x"), T("1*P(0)", "0"), kBox);
  EXPECT_EQ(g.components[0].b, map("1", "x"));
  EXPECT_TRUE(is_admissible(g));
}

TEST(Graph, RejectsMapLeavingInterior) {
  EXPECT_EQ(kind_of([] { graph_cycle(RationalMap::identity(), T("0", "0"), kBox); }),
            ErrorKind::NotInteriorPreserving);
}

TEST(Transpose, SquareRootCorrespondence) {
  Cycle g = graph_unchecked(map("x^2"), kBox, T("2*P(inf)", "0"));
  Cycle t = transpose_cycle(g);
  ASSERT_EQ(t.components.size(), 1u);
  EXPECT_EQ(t.components[0].a, map("x^2"));
  EXPECT_TRUE(t.components[0].b.is_identity());
  EXPECT_FALSE(t.components[0].is_graph());
  EXPECT_EQ(t.source, T("2*P(inf)", "0"));
  EXPECT_EQ(t.target, kBox);
}

TEST(Transpose, Involution) {
  Cycle c = Cycle::make(kBox, kShifted,
                        {Component::make(map("x^2"), map("x^3", "x-1"), 2), Component::make(map("x"), map("x^2+1"))});
  EXPECT_EQ(transpose_cycle(transpose_cycle(c)), c);
}

TEST(Transpose, ConstantSideFails) {
  Cycle c = Cycle::make(T("0", "0"), kBox, {Component::make(map("x"), RationalMap::constant(P("P(0)")))});
  EXPECT_EQ(kind_of([&] { transpose_cycle(c); }), ErrorKind::NotFiniteOverSource);
}

TEST(Admissible, IdentityIntoDual) { EXPECT_TRUE(is_admissible(identity(kBox, kBoxDual))); }

TEST(Admissible, IdentityIntoThickerModulus) {
  Cycle g = identity(kBox, T("2*P(inf)", "0"));
  AdmissibilityReport r = admissibility_report(g);
  EXPECT_FALSE(r.admissible);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_FALSE(r.components[0].modulus);
}

TEST(Admissible, ConstantIntoMinus) {
  Cycle c = Cycle::make(T("0", "0"), T("1*P(inf)", "1*P(0)"),
                        {Component::make(map("x"), RationalMap::constant(P("P(0)")))});
  EXPECT_TRUE(is_admissible(c));
}

TEST(Flags, ShiftIsNotMinimal) {
  MorphismFlags f = morphism_flags(shift_morphism(kBox, D("1*P(inf)")).forward);
  EXPECT_FALSE(f.minimal);
  EXPECT_FALSE(f.sigma_fin);
}

TEST(Flags, IdentityOnItself) {
  ModulusTriple t = T("1*P(0) + 2*P(inf)", "1*P(1)");
  MorphismFlags f = morphism_flags(identity(t, t));
  EXPECT_TRUE(f.dominant);
  EXPECT_TRUE(f.minimal);
  EXPECT_TRUE(f.finite);
  EXPECT_TRUE(f.finite_over_target);
  EXPECT_TRUE(f.sigma_fin);
}

TEST(Flags, PullbackGraphIsMinimal) {
  ModulusTriple t = T("1*P(inf)", "1*P(1)");
  EXPECT_TRUE(morphism_flags(graph_cycle(map("x^2"), pullback_triple(map("x^2"), t), t)).minimal);
}

TEST(Compose, GraphsComposeAsMaps) {
  ModulusTriple t1 = T("6*P(inf)", "0"), t2 = T("2*P(inf)", "0");
  Cycle a = graph_cycle(map("x^3"), t1, t2);
  Cycle b = graph_cycle(map("x^2"), t2, kBox);
  ComposeResult r = compose(a, b);
  ASSERT_TRUE(std::holds_alternative<Cycle>(r));
  EXPECT_EQ(std::get<Cycle>(r), graph_cycle(map("x^6"), t1, kBox));
}

TEST(Compose, ShiftThenIdentityIsExcellent) {
  ComposeResult r = compose(identity(kShifted, kBox), identity(kBox, kBoxDual));
  ASSERT_TRUE(std::holds_alternative<Cycle>(r));
  const Cycle& c = std::get<Cycle>(r);
  EXPECT_EQ(c, identity(kShifted, kBoxDual));
  EXPECT_TRUE(is_admissible(c));
  std::vector<Position> pos = position_classify(c);
  ASSERT_EQ(pos.size(), 1u);
  EXPECT_TRUE(pos[0].excellent);
}

TEST(Compose, NonGraphSecondFactorIsUnsupported) {
  ModulusTriple a = T("2*P(inf)", "0");
  Cycle beta = transpose_cycle(graph_cycle(map("x^2"), a, kBox));  // kBox -> a, component (x^2, x)
  ASSERT_TRUE(is_admissible(beta));
  ComposeResult r = compose(identity(kBox, kBox), beta);
  EXPECT_TRUE(std::holds_alternative<UnsupportedComposition>(r));
}

TEST(Compose, MismatchedMiddle) {
  EXPECT_EQ(kind_of([] { compose(identity(kBox, kBox), identity(kShifted, kBox)); }), ErrorKind::TypeMismatch);
}

TEST(Compose, InadmissibleInput) {
  Cycle bad = graph_unchecked(RationalMap::identity(), kBox, T("2*P(inf)", "0"));
  EXPECT_EQ(kind_of([&] { compose(bad, identity(T("2*P(inf)", "0"), kBox)); }), ErrorKind::NotAdmissible);
}

TEST(Position, IdentityIsVeryGoodNotExcellent) {
  std::vector<Position> pos = position_classify(identity(kBox, kBoxDual));
  ASSERT_EQ(pos.size(), 1u);
  EXPECT_FALSE(pos[0].bad);
  EXPECT_TRUE(pos[0].very_good);
  EXPECT_FALSE(pos[0].excellent);
}

TEST(Reduce, DropsBadComponent) {
  ModulusTriple s = T("0", "0"), t = T("1*P(inf)", "1*P(0)");
  Component bad = Component::make(map("x"), RationalMap::constant(P("P(0)")));
  Component good = Component::make(map("x"), map("x"));
  Cycle c = Cycle::make(s, t, {bad, good});
  std::vector<Position> pos = position_classify(c);
  EXPECT_EQ(std::count_if(pos.begin(), pos.end(), [](const Position& p) { return p.bad; }), 1);
  Cycle r = reduce_cycle(c);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0], good);
}

TEST(Reduce, BadOnlyBecomesZero) {
  Cycle c = Cycle::make(T("0", "0"), T("1*P(inf)", "1*P(0)"),
                        {Component::make(map("x"), RationalMap::constant(P("P(0)")))});
  EXPECT_TRUE(reduce_cycle(c).is_zero());
}

TEST(Cycle, MergesEqualComponents) {
  Cycle c = Cycle::make(kBox, kBox, {Component::make(map("x"), map("x"), 2), Component::make(map("x"), map("x"), 1)});
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_EQ(c.components[0].mult, 3);
}

TEST(ComponentForm, LinearSourceMovedToIdentity) {
  // (2x+1, x) reparametrized by n = 2x+1 becomes (n, (n-1)/2)
  Component c = Component::make(map("2*x+1"), map("x"));
  EXPECT_TRUE(c.a.is_identity());
  EXPECT_EQ(c.b, map("(1/2)*x-1/2"));
}

}  // namespace
}  // namespace modtriple
