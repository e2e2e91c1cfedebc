#include <algorithm>

#include "modtriple/error.hpp"
#include "modtriple/functors.hpp"

namespace modtriple {

bool is_comp_object(const CompObject& c) {
  const PointSet& b = c.base.total.boundary;
  if (c.base.total.is_proper() || !c.completion.total.is_proper()) return false;
  if (!c.witness_c.is_effective() || c.witness_c.support() != b) return false;
  Divisor rest = c.completion.plus - c.witness_c;
  if (!rest.is_effective()) return false;
  return rest.without(b) == c.base.plus && c.completion.minus.without(b) == c.base.minus;
}

ModulusTriple compactification_stage(const ModulusTriple& t, Mult n) {
  return ModulusTriple{CurveSpace::proper(), t.plus + n * Divisor::reduced(t.total.boundary), t.minus};
}

bool admissible_at_level(const Cycle& alpha, Mult n) {
  const ModulusTriple& t = alpha.source;
  if (n < 0) return false;
  // with a nonempty boundary the witness must be supported on all of it
  if (!t.total.is_proper() && n < 1) return false;
  return is_admissible(Cycle{compactification_stage(t, n), alpha.target, alpha.components});
}

Mult minimal_compactification_level(const ModulusTriple& t, const ModulusTriple& s, const Cycle& alpha) {
  if (alpha.source != t || alpha.target != s) throw Error(ErrorKind::TypeMismatch, "cycle does not run from T to S");
  if (!s.total.is_proper()) throw Error(ErrorKind::InvalidArgument, "target total must be proper");
  if (t.total.is_proper()) throw Error(ErrorKind::InvalidArgument, "source total must be open");
  if (!is_admissible(alpha)) throw Error(ErrorKind::NotAdmissible, "cycle is not admissible from T");

  // at a boundary point the deficit is bounded by the pulled-back degrees
  Mult cap = 1;
  for (const auto& c : alpha.components) {
    Mult need = c.a.degree() * t.minus.degree();
    if (!c.b.is_constant()) need += c.b.degree() * s.plus.degree();
    cap = std::max(cap, need + 1);
  }
  for (Mult n = 0; n <= cap; ++n) {
    if (!admissible_at_level(alpha, n)) continue;
    if (n >= 1 && admissible_at_level(alpha, n - 1)) throw std::logic_error("compactification search skipped a level");
    return n;
  }
  throw std::logic_error("no compactification level found below the degree bound");
}

}  // namespace modtriple
