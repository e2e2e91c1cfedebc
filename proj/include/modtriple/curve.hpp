#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modtriple/poly.hpp"

namespace modtriple {

// A closed point of the projective line over Q: a monic irreducible polynomial or infinity.
class ClosedPoint {
 public:
  static ClosedPoint infinity() { return ClosedPoint(); }
  static ClosedPoint rational(const Rat& a);
  // Normalizes to monic; throws SemanticError when p is constant or reducible.
  static ClosedPoint finite(const Poly& p);
  // Caller guarantees p is monic irreducible (factorizer output).
  static ClosedPoint trusted(Poly p);

  bool is_infinity() const { return inf_; }
  const Poly& poly() const { return poly_; }
  int degree() const { return inf_ ? 1 : poly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  // value of a finite rational point
  Rat value() const;

  std::string to_string() const;

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    return a.inf_ == b.inf_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const ClosedPoint& a, const ClosedPoint& b) { return !(a == b); }
  // finite points in polynomial order, infinity last
  friend bool operator<(const ClosedPoint& a, const ClosedPoint& b);

 private:
  ClosedPoint() : inf_(true) {}
  explicit ClosedPoint(Poly p) : inf_(false), poly_(std::move(p)) {}
  bool inf_;
  Poly poly_;
};

using PointSet = std::set<ClosedPoint>;
using Mult = std::int64_t;

// Finitely supported Z-valued function on closed points; zero entries never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const ClosedPoint& p, Mult m = 1);
  static Divisor reduced(const PointSet& pts);

  const std::map<ClosedPoint, Mult>& entries() const { return e_; }
  Mult at(const ClosedPoint& p) const;
  bool is_zero() const { return e_.empty(); }
  bool is_effective() const;
  Mult degree() const;
  PointSet support() const;
  Divisor reduced_part() const;
  // drop every entry at the given points
  Divisor without(const PointSet& pts) const;
  Divisor only(const PointSet& pts) const;

  Divisor& add(const ClosedPoint& p, Mult m);
  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor operator-() const;
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(Mult k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<ClosedPoint, Mult> e_;
};

// a <= b pointwise
bool leq(const Divisor& a, const Divisor& b);

struct OrderReport {
  bool effective;
  bool leq;
  bool equal;
  PointSet support;
  Divisor reduced;
};
OrderReport divisor_order(const Divisor& d1, const Divisor& d2);

// pointwise minimum of two effective divisors; NotEffective otherwise
Divisor min_divisor(const Divisor& d1, const Divisor& d2);
// D = plus - minus with disjoint supports
std::pair<Divisor, Divisor> canonical_split(const Divisor& d);

// Self-map of the projective line: num/den with coprime polynomials, or a constant rational point.
class RationalMap {
 public:
  static RationalMap constant(const ClosedPoint& c);
  // Reduces by the gcd and normalizes den to be monic; collapses to a constant when both are constant.
  static RationalMap fraction(const Poly& num, const Poly& den);
  static RationalMap polynomial(const Poly& p) { return fraction(p, Poly(1L)); }
  static RationalMap identity() { return polynomial(Poly::var()); }

  bool is_constant() const { return constant_.has_value(); }
  const ClosedPoint& constant_value() const { return *constant_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.constant_ == b.constant_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }
  friend bool operator<(const RationalMap& a, const RationalMap& b);

 private:
  RationalMap() = default;
  std::optional<ClosedPoint> constant_;
  Poly num_, den_;
};

// g o f
RationalMap compose_maps(const RationalMap& g, const RationalMap& f);
// inverse of a degree-one map
RationalMap inverse_map(const RationalMap& f);

ClosedPoint point_image(const RationalMap& f, const ClosedPoint& p);
Divisor pullback_point(const RationalMap& f, const ClosedPoint& q);
Divisor pullback_divisor(const RationalMap& f, const Divisor& d);
Divisor pushforward_divisor(const RationalMap& f, const Divisor& d);
Divisor principal_divisor(const RationalMap& f);

// Set-theoretic preimage; a constant map hits either every point or none.
struct Preimage {
  bool everything = false;
  PointSet points;
  bool contains(const ClosedPoint& p) const { return everything || points.count(p) > 0; }
};
Preimage preimage(const RationalMap& f, const PointSet& targets);
// true when a is contained in b
bool subset(const Preimage& a, const Preimage& b);

// The proper line, or the line minus a nonempty finite boundary. Empty boundary means proper.
struct CurveSpace {
  PointSet boundary;

  static CurveSpace proper() { return {}; }
  static CurveSpace open(PointSet b);
  bool is_proper() const { return boundary.empty(); }
  bool contains(const ClosedPoint& p) const { return boundary.count(p) == 0; }
  std::string to_string() const;
  friend bool operator==(const CurveSpace& a, const CurveSpace& b) { return a.boundary == b.boundary; }
  friend bool operator!=(const CurveSpace& a, const CurveSpace& b) { return !(a == b); }
};

bool disjoint(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);

// Text forms: P(inf), P(x^2+1), P(3); divisors as signed sums like 2*P(inf) - 1*P(0), or 0.
ClosedPoint parse_point(std::string_view text);
Divisor parse_divisor(std::string_view text);

}  // namespace modtriple
