#include <algorithm>

#include "modtriple/error.hpp"
#include "modtriple/functors.hpp"

namespace modtriple {

ModulusPair ModulusPair::make(CurveSpace total, Divisor infinity) {
  if (!infinity.is_effective()) throw Error(ErrorKind::NotEffective, "modulus " + infinity.to_string());
  if (!disjoint(infinity.support(), total.boundary))
    throw Error(ErrorKind::SemanticError, "modulus meets the boundary");
  return ModulusPair{std::move(total), std::move(infinity)};
}

ModulusTriple lambda_embed(const CurveSpace& x) { return ModulusTriple{x, Divisor(), Divisor()}; }

CurveSpace omega_forget(const ModulusTriple& t) { return interior(t); }

Transport lambda_adjunction_member(const Cycle& candidate) {
  if (!candidate.source.plus.is_zero() || !candidate.source.minus.is_zero())
    throw Error(ErrorKind::TypeMismatch, "candidate source is not of the form (X, 0, 0)");
  bool cor = std::all_of(candidate.components.begin(), candidate.components.end(),
                         [&](const Component& c) { return in_cor(c, candidate.source, candidate.target); });
  return {cor, is_admissible(candidate)};
}

ModulusTriple phi_embed(const ModulusPair& m) { return ModulusTriple{m.total, m.infinity, Divisor()}; }

std::vector<ModulusPair> p_left(const TripleSum& t) {
  std::vector<ModulusPair> out;
  for (const auto& s : t)
    if (s.minus.is_zero()) out.push_back(ModulusPair{s.total, s.plus});
  return out;
}

ModulusPair q_right(const ModulusTriple& t) {
  if (!classify(t).disjoint) throw Error(ErrorKind::NotDisjoint, t.to_string());
  return ModulusPair{t.total, t.plus};
}

bool mcor_admissible(const std::vector<Component>& comps, const ModulusPair& m, const ModulusPair& n) {
  const PointSet m_out = set_union(m.total.boundary, m.infinity.support());
  const PointSet n_out = set_union(n.total.boundary, n.infinity.support());
  for (const auto& c : comps) {
    if (!subset(preimage(c.b, n_out), preimage(c.a, m_out))) return false;
    if (!subset(preimage(c.b, n.total.boundary), preimage(c.a, m.total.boundary))) return false;
    PointSet off = preimage(c.a, m.total.boundary).points;
    Divisor d = pullback_divisor(c.a, m.infinity);
    if (c.b.is_constant()) {
      const ClosedPoint& v = c.b.constant_value();
      if (!n.total.contains(v)) continue;
      if (n.infinity.at(v) > 0) return false;
    } else {
      PointSet off_b = preimage(c.b, n.total.boundary).points;
      off.insert(off_b.begin(), off_b.end());
      d -= pullback_divisor(c.b, n.infinity);
    }
    if (!d.without(off).is_effective()) return false;
  }
  return true;
}

Transport p_transport(const TripleSum& t, const std::vector<Cycle>& parts, const ModulusPair& m) {
  if (parts.size() != t.size()) throw Error(ErrorKind::TypeMismatch, "one candidate part per summand expected");
  const ModulusTriple target = phi_embed(m);
  Transport r{true, true};
  for (size_t i = 0; i < t.size(); ++i) {
    if (!classify(t[i]).disjoint) throw Error(ErrorKind::NotDisjoint, t[i].to_string());
    if (parts[i].source != t[i] || parts[i].target != target)
      throw Error(ErrorKind::TypeMismatch, "candidate part does not match its summand");
    if (t[i].minus.is_zero()) {
      r.left = r.left && mcor_admissible(parts[i].components, ModulusPair{t[i].total, t[i].plus}, m);
    } else {
      r.left = r.left && parts[i].is_zero();  // the summand is invisible to p
    }
    r.right = r.right && is_admissible(parts[i]);
  }
  return r;
}

Transport q_transport(const Cycle& candidate, const ModulusPair& m) {
  if (candidate.source != phi_embed(m)) throw Error(ErrorKind::TypeMismatch, "candidate source is not phi(M)");
  ModulusPair q = q_right(candidate.target);
  return {mcor_admissible(candidate.components, m, q), is_admissible(candidate)};
}

ModulusTriple separation_adjoint(const ModulusTriple& t) { return separation(t).triple; }

Transport s_transport(const Cycle& alpha) {
  if (!classify(alpha.target).disjoint) throw Error(ErrorKind::NotDisjoint, alpha.target.to_string());
  Cycle moved{separation_adjoint(alpha.source), alpha.target, alpha.components};
  return {is_admissible(alpha), is_admissible(moved)};
}

Cycle extend_correspondence(const Cycle& alpha) {
  if (!classify(alpha.target).disjoint) throw Error(ErrorKind::NotDisjoint, alpha.target.to_string());
  if (!is_admissible(alpha)) throw Error(ErrorKind::NotAdmissible, "correspondence to extend");
  Cycle moved{separation_adjoint(alpha.source), alpha.target, alpha.components};
  if (!is_admissible(moved)) throw std::logic_error("extension to the separation failed admissibility");
  return moved;
}

ModulusTriple g_shrink(const ModulusTriple& t) {
  const PointSet sm = t.minus.support();
  return ModulusTriple{CurveSpace{set_union(t.total.boundary, sm)}, t.plus.without(sm), Divisor()};
}

ModulusPair g_shrink_pair(const ModulusTriple& t) {
  ModulusTriple g = g_shrink(t);
  return ModulusPair{g.total, g.plus};
}

Transport g_adjunction_member(const Cycle& candidate, const ModulusPair& m) {
  if (candidate.source != phi_embed(m)) throw Error(ErrorKind::TypeMismatch, "candidate source is not (M, M_inf, 0)");
  const bool admissible = is_admissible(candidate);
  const auto pos = position_classify(candidate);
  const bool excellent = std::all_of(pos.begin(), pos.end(), [](const Position& p) { return p.excellent; });
  if (admissible && !excellent) throw Error(ErrorKind::NotExcellent, "candidate is admissible but not in excellent position");
  return {mcor_admissible(candidate.components, m, g_shrink_pair(candidate.target)), admissible && excellent};
}

}  // namespace modtriple
