#include "modtriple/error.hpp"
#include "modtriple/triple.hpp"

namespace modtriple {

ModulusTriple ModulusTriple::make(CurveSpace total, Divisor plus, Divisor minus) {
  if (!plus.is_effective()) throw Error(ErrorKind::NotEffective, "plus divisor " + plus.to_string());
  if (!minus.is_effective()) throw Error(ErrorKind::NotEffective, "minus divisor " + minus.to_string());
  if (!disjoint(plus.support(), total.boundary) || !disjoint(minus.support(), total.boundary))
    throw Error(ErrorKind::SemanticError, "divisor support meets the boundary");
  return ModulusTriple{std::move(total), std::move(plus), std::move(minus)};
}

std::string ModulusTriple::to_string() const {
  return "(" + total.to_string() + ", " + plus.to_string() + ", " + minus.to_string() + ")";
}

CurveSpace interior(const ModulusTriple& t) { return CurveSpace{t.interior_complement()}; }

ModulusTriple dual(const ModulusTriple& t) { return ModulusTriple{t.total, t.minus, t.plus}; }

Separation separation(const ModulusTriple& t) {
  Divisor f = min_divisor(t.plus, t.minus);
  return {ModulusTriple{t.total, t.plus - f, t.minus - f}, f};
}

ClassReport classify(const ModulusTriple& t) {
  ClassReport r{};
  const PointSet sp = t.plus.support();
  const PointSet sm = t.minus.support();
  r.disjoint = disjoint(sp, sm);
  r.saturated = (t.plus - t.minus).support() == sp;
  const Divisor plus_red = t.plus.reduced_part();
  r.min_class = plus_red == min_divisor(t.plus, t.minus) && disjoint(sp, (t.minus - plus_red).support());
  r.man_class = t.plus == plus_red && (t.minus - t.plus).is_effective();
  r.proper = t.total.is_proper();
  r.coadmissible = t.plus.is_zero();
  r.modulus_pair = t.minus.is_zero();
  return r;
}

ModulusTriple pullback_triple(const RationalMap& f, const ModulusTriple& t) {
  if (!t.total.is_proper()) throw Error(ErrorKind::InvalidArgument, "pullback_triple needs a proper total");
  if (f.is_constant()) throw Error(ErrorKind::DegenerateInput, "pullback_triple along a constant map");
  return ModulusTriple{CurveSpace::proper(), pullback_divisor(f, t.plus), pullback_divisor(f, t.minus)};
}

bool modulus_condition_point(const ClosedPoint& w, const ModulusTriple& t) {
  Divisor rest = t.minus - min_divisor(t.plus, t.minus);
  return rest.at(w) == 0;
}

}  // namespace modtriple
