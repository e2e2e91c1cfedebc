#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modtriple/curve.hpp"

namespace modtriple {

// (total, T+, T-) with effective divisors living on the proper model, away from the boundary.
struct ModulusTriple {
  CurveSpace total;
  Divisor plus;
  Divisor minus;

  // validating constructor: NotEffective / SemanticError on bad input
  static ModulusTriple make(CurveSpace total, Divisor plus, Divisor minus);
  static ModulusTriple proper(Divisor plus, Divisor minus) { return make(CurveSpace::proper(), std::move(plus), std::move(minus)); }

  // boundary together with |T+|: the points removed to form the interior
  PointSet interior_complement() const { return set_union(total.boundary, plus.support()); }
  std::string to_string() const;

  friend bool operator==(const ModulusTriple& a, const ModulusTriple& b) {
    return a.total == b.total && a.plus == b.plus && a.minus == b.minus;
  }
  friend bool operator!=(const ModulusTriple& a, const ModulusTriple& b) { return !(a == b); }
};

using TripleSum = std::vector<ModulusTriple>;

CurveSpace interior(const ModulusTriple& t);
ModulusTriple dual(const ModulusTriple& t);

struct Separation {
  ModulusTriple triple;
  Divisor fundamental;
};
Separation separation(const ModulusTriple& t);

struct ClassReport {
  bool disjoint;
  bool saturated;
  bool min_class;
  bool man_class;
  bool proper;
  bool coadmissible;
  bool modulus_pair;
};
ClassReport classify(const ModulusTriple& t);

struct ProductData {
  ModulusTriple source;
  ModulusTriple target;
};

// A map into the product of the two totals, from the line or from a single closed point.
struct CheckedMap {
  std::optional<ClosedPoint> domain_point;  // empty: the domain is the proper line
  RationalMap a;
  RationalMap b;
};

bool modulus_condition(const CheckedMap& m, const ProductData& data);
bool modulus_condition_point(const ClosedPoint& w, const ModulusTriple& t);

// (P1, f*T+, f*T-); T must be proper
ModulusTriple pullback_triple(const RationalMap& f, const ModulusTriple& t);

}  // namespace modtriple
