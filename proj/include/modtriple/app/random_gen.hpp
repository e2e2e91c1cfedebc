#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "modtriple/functors.hpp"

namespace modtriple::gen {

// mt19937_64 with our own range reduction, so streams agree across standard libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  bool chance(int percent) { return uniform(0, 99) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))]; }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label);

struct Bounds {
  int degree = 4;
  int height = 10;
};

// points of degree <= 2 together with infinity; the first six form the small pool
const std::vector<ClosedPoint>& point_pool();
const std::vector<ClosedPoint>& small_pool();
const std::vector<ClosedPoint>& rational_pool();

Rat random_rat(Rng& r, int height);
Poly random_poly(Rng& r, int degree, int height);  // exact degree
Poly random_irreducible(Rng& r, int max_degree, int height);

Divisor random_effective(Rng& r, const std::vector<ClosedPoint>& pool, int max_terms);
Divisor random_signed(Rng& r, const std::vector<ClosedPoint>& pool, int max_terms);
// a random effective divisor below d
Divisor random_below(Rng& r, const Divisor& d);

RationalMap random_map(Rng& r, const Bounds& b);
RationalMap random_map_of_degree(Rng& r, int degree, int height);
RationalMap random_constant(Rng& r);

ModulusTriple random_proper_triple(Rng& r, int max_terms = 3);
// open total with one or two boundary points off the supports
ModulusTriple random_open_triple(Rng& r, int max_terms = 3);
ModulusTriple random_triple(Rng& r, int max_terms = 3);
ModulusTriple random_disjoint_triple(Rng& r, int max_terms = 3);

IYObject random_iy(Rng& r);
MlogObject random_mlog(Rng& r);
NePair random_ne(Rng& r);
ModulusPair random_pair(Rng& r, bool proper_total = true);

}  // namespace modtriple::gen
