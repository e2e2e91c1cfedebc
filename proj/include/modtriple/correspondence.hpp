#pragma once

#include <string>
#include <variant>
#include <vector>

#include "modtriple/triple.hpp"

namespace modtriple {

// One irreducible piece of a correspondence, parametrized by a copy of the line
// (its normalized closure): n -> (a(n), b(n)).
struct Component {
  RationalMap a;
  RationalMap b;
  Mult mult = 1;

  // Throws NotFiniteOverSource for constant a. Degree-one a is moved to the identity,
  // otherwise degree-one b is moved to the identity.
  static Component make(const RationalMap& a, const RationalMap& b, Mult mult = 1);
  bool is_graph() const { return a.is_identity(); }
  std::string to_string() const;
  friend bool operator==(const Component& x, const Component& y) {
    return x.a == y.a && x.b == y.b && x.mult == y.mult;
  }
};

struct Cycle {
  ModulusTriple source;
  ModulusTriple target;
  std::vector<Component> components;

  // merges equal (a, b) pairs, drops zero multiplicities, sorts
  static Cycle make(ModulusTriple source, ModulusTriple target, std::vector<Component> comps);
  bool is_zero() const { return components.empty(); }
  friend bool operator==(const Cycle& x, const Cycle& y) {
    return x.source == y.source && x.target == y.target && x.components == y.components;
  }
};

Cycle graph_cycle(const RationalMap& f, const ModulusTriple& s, const ModulusTriple& t);
// no interior check; used to probe candidates that may fail admissibility
Cycle graph_unchecked(const RationalMap& f, const ModulusTriple& s, const ModulusTriple& t);
Cycle transpose_cycle(const Cycle& alpha);

// n with a(n) in S° forces b(n) in T°
bool in_cor(const Component& c, const ModulusTriple& s, const ModulusTriple& t);
// n with b(n) off the target total forces a(n) off the source total
bool left_proper(const Component& c, const ModulusTriple& s, const ModulusTriple& t);

struct ComponentVerdict {
  bool in_cor;
  bool left_proper;
  bool modulus;
  bool admissible() const { return in_cor && left_proper && modulus; }
};

struct AdmissibilityReport {
  bool admissible;
  std::vector<ComponentVerdict> components;
};

AdmissibilityReport admissibility_report(const Cycle& alpha);
bool is_admissible(const Cycle& alpha);

struct MorphismFlags {
  bool dominant;
  bool minimal;
  bool finite;              // closure finite over the source total
  bool finite_over_target;  // literal target reading, kept for comparison
  bool sigma_fin;
};
MorphismFlags morphism_flags(const Cycle& alpha);

struct UnsupportedComposition {
  std::string reason;
};
using ComposeResult = std::variant<Cycle, UnsupportedComposition>;

// TypeMismatch on mismatched middle triples, NotAdmissible on inadmissible input.
ComposeResult compose(const Cycle& alpha, const Cycle& beta);

struct Position {
  bool bad;
  bool very_good;
  bool excellent;
};
std::vector<Position> position_classify(const Cycle& alpha);
Position component_position(const Component& c, const ModulusTriple& s, const ModulusTriple& t);
Cycle reduce_cycle(const Cycle& alpha);

struct ShiftMorphism {
  Cycle forward;  // identity (T, T+ + D, T- + D) -> T
  bool is_iso;
  bool reverse_admissible;
};
ShiftMorphism shift_morphism(const ModulusTriple& t, const Divisor& d);

}  // namespace modtriple
