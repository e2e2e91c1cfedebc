#include <algorithm>
#include <map>

#include "modtriple/correspondence.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

Component Component::make(const RationalMap& a, const RationalMap& b, Mult mult) {
  if (a.is_constant()) throw Error(ErrorKind::NotFiniteOverSource, "component with constant first projection");
  if (mult < 1) throw Error(ErrorKind::InvalidArgument, "component multiplicity must be positive");
  if (a.degree() == 1) {
    RationalMap h = inverse_map(a);
    return Component{RationalMap::identity(), compose_maps(b, h), mult};
  }
  if (!b.is_constant() && b.degree() == 1) {
    RationalMap h = inverse_map(b);
    return Component{compose_maps(a, h), RationalMap::identity(), mult};
  }
  return Component{a, b, mult};
}

std::string Component::to_string() const {
  return std::to_string(mult) + " x [" + a.to_string() + ", " + b.to_string() + "]";
}

Cycle Cycle::make(ModulusTriple source, ModulusTriple target, std::vector<Component> comps) {
  std::map<std::pair<RationalMap, RationalMap>, Mult> merged;
  for (const auto& c : comps) merged[{c.a, c.b}] += c.mult;
  Cycle out{std::move(source), std::move(target), {}};
  for (const auto& [ab, m] : merged)
    if (m != 0) out.components.push_back(Component{ab.first, ab.second, m});
  return out;
}

namespace {

Preimage as_preimage(const PointSet& pts) { return Preimage{false, pts}; }

}  // namespace

bool in_cor(const Component& c, const ModulusTriple& s, const ModulusTriple& t) {
  return subset(preimage(c.b, t.interior_complement()), preimage(c.a, s.interior_complement()));
}

bool left_proper(const Component& c, const ModulusTriple& s, const ModulusTriple& t) {
  return subset(preimage(c.b, t.total.boundary), preimage(c.a, s.total.boundary));
}

Cycle graph_unchecked(const RationalMap& f, const ModulusTriple& s, const ModulusTriple& t) {
  return Cycle::make(s, t, {Component::make(RationalMap::identity(), f, 1)});
}

Cycle graph_cycle(const RationalMap& f, const ModulusTriple& s, const ModulusTriple& t) {
  Cycle g = graph_unchecked(f, s, t);
  if (!in_cor(g.components.front(), s, t))
    throw Error(ErrorKind::NotInteriorPreserving, f.to_string() + " does not map the source interior into the target interior");
  return g;
}

Cycle transpose_cycle(const Cycle& alpha) {
  std::vector<Component> comps;
  for (const auto& c : alpha.components) {
    if (c.b.is_constant()) throw Error(ErrorKind::NotFiniteOverSource, "transpose of a component with constant second projection");
    comps.push_back(Component::make(c.b, c.a, c.mult));
  }
  return Cycle::make(alpha.target, alpha.source, std::move(comps));
}

AdmissibilityReport admissibility_report(const Cycle& alpha) {
  AdmissibilityReport r{true, {}};
  const ProductData data{alpha.source, alpha.target};
  for (const auto& c : alpha.components) {
    ComponentVerdict v{};
    v.in_cor = in_cor(c, alpha.source, alpha.target);
    v.left_proper = left_proper(c, alpha.source, alpha.target);
    v.modulus = modulus_condition(CheckedMap{std::nullopt, c.a, c.b}, data);
    r.admissible = r.admissible && v.admissible();
    r.components.push_back(v);
  }
  return r;
}

bool is_admissible(const Cycle& alpha) {
  const ProductData data{alpha.source, alpha.target};
  for (const auto& c : alpha.components) {
    if (!in_cor(c, alpha.source, alpha.target)) return false;
    if (!left_proper(c, alpha.source, alpha.target)) return false;
    if (!modulus_condition(CheckedMap{std::nullopt, c.a, c.b}, data)) return false;
  }
  return true;
}

MorphismFlags morphism_flags(const Cycle& alpha) {
  const ModulusTriple& S = alpha.source;
  const ModulusTriple& T = alpha.target;
  MorphismFlags f{};
  f.dominant = !alpha.components.empty() &&
               std::all_of(alpha.components.begin(), alpha.components.end(),
                           [](const Component& c) { return !c.b.is_constant(); });
  f.finite = std::all_of(alpha.components.begin(), alpha.components.end(),
                         [&](const Component& c) { return left_proper(c, S, T); });
  f.finite_over_target = f.dominant && std::all_of(alpha.components.begin(), alpha.components.end(), [&](const Component& c) {
    return subset(preimage(c.a, S.total.boundary), preimage(c.b, T.total.boundary));
  });
  f.minimal = false;
  if (alpha.components.size() == 1) {
    const Component& c = alpha.components.front();
    if (c.is_graph() && c.mult == 1 && !c.b.is_constant() && subset(preimage(c.b, T.total.boundary), as_preimage(S.total.boundary))) {
      f.minimal = S.plus == pullback_divisor(c.b, T.plus).without(S.total.boundary) &&
                  S.minus == pullback_divisor(c.b, T.minus).without(S.total.boundary);
    }
    f.sigma_fin = f.minimal && c.b.is_identity() && S.total == T.total &&
                  S.interior_complement() == T.interior_complement();
  }
  return f;
}

Position component_position(const Component& c, const ModulusTriple& s, const ModulusTriple& t) {
  Position p{};
  const PointSet tminus = t.minus.support();
  if (c.b.is_constant()) {
    const ClosedPoint& v = c.b.constant_value();
    p.bad = t.minus.at(v) > 0 && t.interior_complement().count(v) == 0;
  }
  // hits = {n : b(n) in |T-|}; compare against a^{-1}|S-| outside an excluded set
  Preimage hits = preimage(c.b, tminus);
  Preimage target = preimage(c.a, s.minus.support());
  auto contained_outside = [&](const Preimage& excluded) {
    if (hits.everything) return false;  // a is finite, so the excluded and target sets are finite
    for (const auto& n : hits.points)
      if (!excluded.contains(n) && !target.contains(n)) return false;
    return true;
  };
  p.very_good = contained_outside(preimage(c.a, s.interior_complement()));
  p.excellent = contained_outside(preimage(c.a, s.total.boundary));
  return p;
}

std::vector<Position> position_classify(const Cycle& alpha) {
  std::vector<Position> out;
  for (const auto& c : alpha.components) out.push_back(component_position(c, alpha.source, alpha.target));
  return out;
}

Cycle reduce_cycle(const Cycle& alpha) {
  std::vector<Component> keep;
  for (const auto& c : alpha.components)
    if (!component_position(c, alpha.source, alpha.target).bad) keep.push_back(c);
  return Cycle{alpha.source, alpha.target, keep};
}

ShiftMorphism shift_morphism(const ModulusTriple& t, const Divisor& d) {
  if (!d.is_effective()) throw Error(ErrorKind::NotEffective, "shift divisor " + d.to_string());
  ModulusTriple shifted = ModulusTriple::make(t.total, t.plus + d, t.minus + d);
  ShiftMorphism r{graph_unchecked(RationalMap::identity(), shifted, t), false, false};
  if (!is_admissible(r.forward)) throw std::logic_error("shift morphism failed certification");
  const PointSet dp = d.support(), tp = t.plus.support();
  r.is_iso = std::includes(tp.begin(), tp.end(), dp.begin(), dp.end());
  r.reverse_admissible = is_admissible(graph_unchecked(RationalMap::identity(), t, shifted));
  return r;
}

}  // namespace modtriple
