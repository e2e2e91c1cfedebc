#pragma once

#include <vector>

#include "modtriple/correspondence.hpp"

namespace modtriple {

// A total with a single effective divisor at infinity.
struct ModulusPair {
  CurveSpace total;
  Divisor infinity;

  static ModulusPair make(CurveSpace total, Divisor infinity);
  friend bool operator==(const ModulusPair& a, const ModulusPair& b) {
    return a.total == b.total && a.infinity == b.infinity;
  }
};

// Result of checking one candidate on both sides of an adjunction or embedding.
struct Transport {
  bool left;
  bool right;
  bool agrees() const { return left == right; }
};

// lambda / omega
ModulusTriple lambda_embed(const CurveSpace& x);
CurveSpace omega_forget(const ModulusTriple& t);
// candidate from lambda(X): left = finite correspondence into the interior, right = admissible
Transport lambda_adjunction_member(const Cycle& candidate);

// phi / p / q
ModulusTriple phi_embed(const ModulusPair& m);
std::vector<ModulusPair> p_left(const TripleSum& t);
ModulusPair q_right(const ModulusTriple& t);  // NotDisjoint

// Admissibility between modulus pairs, checked directly: interiors, left properness and a*M >= b*N.
bool mcor_admissible(const std::vector<Component>& comps, const ModulusPair& m, const ModulusPair& n);

// parts[i] is a cycle from t[i] to phi(m); all summands must be disjoint
Transport p_transport(const TripleSum& t, const std::vector<Cycle>& parts, const ModulusPair& m);
// candidate from phi(m) to t, t disjoint
Transport q_transport(const Cycle& candidate, const ModulusPair& m);

// separation adjoint and extension of correspondences into disjoint triples
ModulusTriple separation_adjoint(const ModulusTriple& t);
Cycle extend_correspondence(const Cycle& alpha);  // NotDisjoint, NotAdmissible
Transport s_transport(const Cycle& alpha);        // admissible from T vs from its separation

// g: moves |T-| into the boundary
ModulusTriple g_shrink(const ModulusTriple& t);
ModulusPair g_shrink_pair(const ModulusTriple& t);
// candidate from psi(m) = (M, M_inf, 0) to t; NotExcellent for admissible candidates not in excellent position
Transport g_adjunction_member(const Cycle& candidate, const ModulusPair& m);

// bridge to triples (X, Y, Z) with disjoint Y, Z
struct IYObject {
  Divisor Y;
  Divisor Z;
  static IYObject make(Divisor y, Divisor z);
  friend bool operator==(const IYObject& a, const IYObject& b) { return a.Y == b.Y && a.Z == b.Z; }
};
ModulusTriple iy_to_triple(const IYObject& o);
IYObject triple_to_iy(const ModulusTriple& t);  // NotMinClass
bool is_iy_morphism(const RationalMap& f, const IYObject& o1, const IYObject& o2);

// bridge to log pairs (boundary, modulus)
struct MlogObject {
  Divisor boundary;
  Divisor modulus;
  static MlogObject make(Divisor boundary, Divisor modulus);
  friend bool operator==(const MlogObject& a, const MlogObject& b) {
    return a.boundary == b.boundary && a.modulus == b.modulus;
  }
};
ModulusTriple mlog_to_triple(const MlogObject& o);
MlogObject triple_to_mlog(const ModulusTriple& t);  // NotManClass
bool is_mlog_morphism(const RationalMap& f, const MlogObject& o1, const MlogObject& o2);

// pairs with a not necessarily effective divisor at infinity
struct NePair {
  Divisor infinity;
  friend bool operator==(const NePair& a, const NePair& b) { return a.infinity == b.infinity; }
};
ModulusTriple ne_embed(const NePair& x);
NePair mcor_embed(const ModulusPair& m);
bool ne_hom_member(const std::vector<Component>& comps, const NePair& x, const NePair& y);

// compactifications of a triple with open total
struct CompObject {
  ModulusTriple base;
  ModulusTriple completion;
  Divisor witness_c;
};
bool is_comp_object(const CompObject& c);
// (P1, T+ + n * boundary, T-)
ModulusTriple compactification_stage(const ModulusTriple& t, Mult n);
// least n with the candidate admissible from a stage that is a compactification of t
Mult minimal_compactification_level(const ModulusTriple& t, const ModulusTriple& s, const Cycle& alpha);
bool admissible_at_level(const Cycle& alpha, Mult n);

}  // namespace modtriple
