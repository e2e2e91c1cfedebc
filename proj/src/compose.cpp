#include "modtriple/correspondence.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

ComposeResult compose(const Cycle& alpha, const Cycle& beta) {
  if (alpha.target != beta.source)
    throw Error(ErrorKind::TypeMismatch, "middle triples differ: " + alpha.target.to_string() + " vs " + beta.source.to_string());
  if (!is_admissible(alpha)) throw Error(ErrorKind::NotAdmissible, "first cycle is not admissible");
  if (!is_admissible(beta)) throw Error(ErrorKind::NotAdmissible, "second cycle is not admissible");

  std::vector<Component> comps;
  for (const auto& x : alpha.components) {
    for (const auto& y : beta.components) {
      // a degree-one first projection is stored as the identity, so both native cases land here
      if (!y.is_graph())
        return UnsupportedComposition{"component " + x.to_string() + " followed by multivalued " + y.to_string()};
      comps.push_back(Component::make(x.a, compose_maps(y.b, x.b), x.mult * y.mult));
    }
  }
  Cycle out = Cycle::make(alpha.source, beta.target, std::move(comps));
  if (!is_admissible(out)) throw std::logic_error("composite of admissible cycles failed admissibility");
  return out;
}

}  // namespace modtriple
