#include "modtriple/error.hpp"
#include "modtriple/functors.hpp"

namespace modtriple {

IYObject IYObject::make(Divisor y, Divisor z) {
  if (!y.is_effective() || !z.is_effective()) throw Error(ErrorKind::NotEffective, "Y and Z must be effective");
  if (!disjoint(y.support(), z.support())) throw Error(ErrorKind::SemanticError, "|Y| and |Z| must be disjoint");
  return IYObject{std::move(y), std::move(z)};
}

ModulusTriple iy_to_triple(const IYObject& o) {
  return ModulusTriple{CurveSpace::proper(), o.Z, o.Y + o.Z.reduced_part()};
}

IYObject triple_to_iy(const ModulusTriple& t) {
  if (!t.total.is_proper() || !classify(t).min_class) throw Error(ErrorKind::NotMinClass, t.to_string());
  return IYObject{t.minus - t.plus.reduced_part(), t.plus};
}

bool is_iy_morphism(const RationalMap& f, const IYObject& o1, const IYObject& o2) {
  const PointSet z2 = o2.Z.support();
  if (f.is_constant()) {
    const ClosedPoint& c = f.constant_value();
    if (o2.Y.at(c) > 0) return true;
    if (z2.count(c)) return false;
    return o1.Y.is_zero();  // Y <= f*Y' = 0; the Z condition is vacuous
  }
  if (!subset(preimage(f, z2), Preimage{false, o1.Z.support()})) return false;
  if (!leq(o1.Y, pullback_divisor(f, o2.Y))) return false;
  return leq(pullback_divisor(f, o2.Z - o2.Z.reduced_part()), o1.Z - o1.Z.reduced_part());
}

MlogObject MlogObject::make(Divisor boundary, Divisor modulus) {
  if (boundary != boundary.reduced_part() || !boundary.is_effective())
    throw Error(ErrorKind::SemanticError, "log boundary must be reduced effective");
  if (!modulus.is_effective()) throw Error(ErrorKind::NotEffective, "modulus " + modulus.to_string());
  return MlogObject{std::move(boundary), std::move(modulus)};
}

ModulusTriple mlog_to_triple(const MlogObject& o) {
  return ModulusTriple{CurveSpace::proper(), o.boundary, o.modulus + o.boundary};
}

MlogObject triple_to_mlog(const ModulusTriple& t) {
  if (!t.total.is_proper() || !classify(t).man_class) throw Error(ErrorKind::NotManClass, t.to_string());
  return MlogObject{t.plus, t.minus - t.plus};
}

bool is_mlog_morphism(const RationalMap& f, const MlogObject& o1, const MlogObject& o2) {
  if (!subset(preimage(f, o2.boundary.support()), Preimage{false, o1.boundary.support()})) return false;
  if (f.is_constant()) {
    if (o2.modulus.at(f.constant_value()) > 0) return true;
    return o1.modulus.is_zero();
  }
  return leq(o1.modulus, pullback_divisor(f, o2.modulus));
}

ModulusTriple ne_embed(const NePair& x) {
  auto [dp, dm] = canonical_split(x.infinity);
  return ModulusTriple{CurveSpace::proper(), dp + dm, 2 * dm};
}

NePair mcor_embed(const ModulusPair& m) {
  if (!m.total.is_proper()) throw Error(ErrorKind::InvalidArgument, "embedding needs a proper total");
  return NePair{m.infinity};
}

bool ne_hom_member(const std::vector<Component>& comps, const NePair& x, const NePair& y) {
  const PointSet zx = x.infinity.support(), zy = y.infinity.support();
  for (const auto& c : comps) {
    if (!subset(preimage(c.b, zy), preimage(c.a, zx))) return false;  // V lies over the interiors
    Divisor lhs = pullback_divisor(c.a, x.infinity);
    Divisor rhs = c.b.is_constant() ? Divisor() : pullback_divisor(c.b, y.infinity);
    if (!leq(rhs, lhs)) return false;
  }
  return true;
}

}  // namespace modtriple
