// The modulus condition for a map into the product of two totals, evaluated after
// pulling the product divisors back to the domain. Blow-ups along Cartier divisors on
// a smooth curve are isomorphisms, so the inequality form is the whole condition.

#include "modtriple/error.hpp"
#include "modtriple/triple.hpp"

namespace modtriple {

namespace {

bool point_domain(const ClosedPoint& p, const RationalMap& a, const RationalMap& b, const ProductData& data) {
  const ModulusTriple& S = data.source;
  const ModulusTriple& T = data.target;
  ClosedPoint s = point_image(a, p);
  ClosedPoint t = point_image(b, p);
  if (!S.total.contains(s) || !T.total.contains(t)) return true;  // outside the product of totals
  if (T.plus.at(t) > 0) return false;
  if (T.minus.at(t) > 0) return true;
  return S.minus.at(s) == 0;
}

}  // namespace

bool modulus_condition(const CheckedMap& m, const ProductData& data) {
  if (m.domain_point) return point_domain(*m.domain_point, m.a, m.b, data);
  if (m.a.is_constant()) throw Error(ErrorKind::NotFiniteOverSource, "first projection is constant");
  const ModulusTriple& S = data.source;
  const ModulusTriple& T = data.target;

  // domain points lying over the boundary of either total are not on the closure
  PointSet off = preimage(m.a, S.total.boundary).points;
  Divisor d = pullback_divisor(m.a, S.plus) - pullback_divisor(m.a, S.minus);

  if (m.b.is_constant()) {
    const ClosedPoint& c = m.b.constant_value();
    if (!T.total.contains(c)) return true;
    // the component sits inside |T+| x S (this includes failure of the fundamental-locus condition)
    if (T.plus.at(c) > 0) return false;
    if (T.minus.at(c) > 0) return true;
  } else {
    PointSet off_b = preimage(m.b, T.total.boundary).points;
    off.insert(off_b.begin(), off_b.end());
    d += pullback_divisor(m.b, T.minus);
    d -= pullback_divisor(m.b, T.plus);
  }
  return d.without(off).is_effective();
}

}  // namespace modtriple
