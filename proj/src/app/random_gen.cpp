#include "modtriple/app/random_gen.hpp"

#include <algorithm>

namespace modtriple::gen {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // splitmix finalizer
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

const std::vector<ClosedPoint>& point_pool() {
  static const std::vector<ClosedPoint> pool = [] {
    std::vector<ClosedPoint> v;
    for (long a : {0L, 1L, -1L}) v.push_back(ClosedPoint::rational(Rat(a)));
    v.push_back(ClosedPoint::infinity());
    v.push_back(ClosedPoint::finite(parse_poly("x^2 + 1")));
    v.push_back(ClosedPoint::rational(Rat(2)));
    v.push_back(ClosedPoint::finite(parse_poly("x^2 - 2")));
    v.push_back(ClosedPoint::rational(Rat(1, 2)));
    v.push_back(ClosedPoint::finite(parse_poly("x^2 + x + 1")));
    v.push_back(ClosedPoint::rational(Rat(-2)));
    return v;
  }();
  return pool;
}

const std::vector<ClosedPoint>& small_pool() {
  static const std::vector<ClosedPoint> pool(point_pool().begin(), point_pool().begin() + 6);
  return pool;
}

const std::vector<ClosedPoint>& rational_pool() {
  static const std::vector<ClosedPoint> pool = [] {
    std::vector<ClosedPoint> v;
    for (const auto& p : point_pool())
      if (p.degree() == 1) v.push_back(p);
    return v;
  }();
  return pool;
}

Rat random_rat(Rng& r, int height) {
  Int num = r.uniform(-height, height);
  if (r.chance(75)) return Rat(num);
  return make_rat(num, Int(r.uniform(1, height)));
}

Poly random_poly(Rng& r, int degree, int height) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rat(r, height));
  while (c.back() == 0) c.back() = random_rat(r, height);
  return Poly(std::move(c));
}

Poly random_irreducible(Rng& r, int max_degree, int height) {
  for (;;) {
    Poly p = random_poly(r, static_cast<int>(r.uniform(1, max_degree)), height);
    if (is_irreducible(p)) return p;
  }
}

Divisor random_effective(Rng& r, const std::vector<ClosedPoint>& pool, int max_terms) {
  Divisor d;
  int n = static_cast<int>(r.uniform(0, max_terms));
  for (int i = 0; i < n; ++i) d.add(r.pick(pool), r.uniform(1, 3));
  return d;
}

Divisor random_signed(Rng& r, const std::vector<ClosedPoint>& pool, int max_terms) {
  Divisor d;
  int n = static_cast<int>(r.uniform(0, max_terms));
  for (int i = 0; i < n; ++i) {
    Mult m = r.uniform(1, 3);
    d.add(r.pick(pool), r.chance(50) ? m : -m);
  }
  return d;
}

Divisor random_below(Rng& r, const Divisor& d) {
  Divisor out;
  for (const auto& [p, m] : d.entries())
    if (m > 0) out.add(p, r.uniform(0, m));
  return out;
}

RationalMap random_map_of_degree(Rng& r, int degree, int height) {
  for (;;) {
    Poly num, den;
    int lead = static_cast<int>(r.uniform(0, 2));
    // the degree is carried by num, den, or both
    if (lead == 0 || degree == 0) {
      num = random_poly(r, degree, height);
      den = r.chance(50) ? Poly(1L) : random_poly(r, static_cast<int>(r.uniform(0, degree)), height);
    } else if (lead == 1) {
      den = random_poly(r, degree, height);
      num = random_poly(r, static_cast<int>(r.uniform(0, degree)), height);
    } else {
      num = random_poly(r, degree, height);
      den = random_poly(r, degree, height);
    }
    RationalMap f = RationalMap::fraction(num, den);
    if (!f.is_constant() && f.degree() == degree) return f;
  }
}

RationalMap random_map(Rng& r, const Bounds& b) {
  return random_map_of_degree(r, static_cast<int>(r.uniform(1, b.degree)), b.height);
}

RationalMap random_constant(Rng& r) { return RationalMap::constant(r.pick(rational_pool())); }

ModulusTriple random_proper_triple(Rng& r, int max_terms) {
  return ModulusTriple{CurveSpace::proper(), random_effective(r, point_pool(), max_terms),
                       random_effective(r, point_pool(), max_terms)};
}

ModulusTriple random_open_triple(Rng& r, int max_terms) {
  ModulusTriple t = random_proper_triple(r, max_terms);
  PointSet used = set_union(t.plus.support(), t.minus.support());
  std::vector<ClosedPoint> free;
  for (const auto& p : point_pool())
    if (!used.count(p)) free.push_back(p);
  PointSet b;
  int n = static_cast<int>(r.uniform(1, 2));
  for (int i = 0; i < n; ++i) b.insert(r.pick(free));
  t.total = CurveSpace::open(b);
  return t;
}

ModulusTriple random_triple(Rng& r, int max_terms) {
  return r.chance(25) ? random_open_triple(r, max_terms) : random_proper_triple(r, max_terms);
}

ModulusTriple random_disjoint_triple(Rng& r, int max_terms) {
  ModulusTriple t = random_proper_triple(r, max_terms);
  t.minus = t.minus.without(t.plus.support());
  return t;
}

IYObject random_iy(Rng& r) {
  Divisor z = random_effective(r, point_pool(), 3);
  Divisor y = random_effective(r, point_pool(), 3).without(z.support());
  return IYObject{y, z};
}

MlogObject random_mlog(Rng& r) {
  return MlogObject{random_effective(r, point_pool(), 3).reduced_part(), random_effective(r, point_pool(), 3)};
}

NePair random_ne(Rng& r) { return NePair{random_signed(r, point_pool(), 4)}; }

ModulusPair random_pair(Rng& r, bool proper_total) {
  ModulusPair m{CurveSpace::proper(), random_effective(r, point_pool(), 3)};
  if (!proper_total && r.chance(50)) {
    std::vector<ClosedPoint> free;
    for (const auto& p : point_pool())
      if (!m.infinity.at(p)) free.push_back(p);
    m.total = CurveSpace::open({r.pick(free)});
  }
  return m;
}

}  // namespace modtriple::gen
