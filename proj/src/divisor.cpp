#include <algorithm>

#include "modtriple/curve.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

Divisor Divisor::point(const ClosedPoint& p, Mult m) {
  Divisor d;
  d.add(p, m);
  return d;
}

Divisor Divisor::reduced(const PointSet& pts) {
  Divisor d;
  for (const auto& p : pts) d.add(p, 1);
  return d;
}

Mult Divisor::at(const ClosedPoint& p) const {
  auto it = e_.find(p);
  return it == e_.end() ? 0 : it->second;
}

bool Divisor::is_effective() const {
  return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second > 0; });
}

Mult Divisor::degree() const {
  Mult s = 0;
  for (const auto& [p, m] : e_) s += m * p.degree();
  return s;
}

PointSet Divisor::support() const {
  PointSet s;
  for (const auto& [p, m] : e_) s.insert(p);
  return s;
}

Divisor Divisor::reduced_part() const { return reduced(support()); }

Divisor Divisor::without(const PointSet& pts) const {
  Divisor d;
  for (const auto& [p, m] : e_)
    if (!pts.count(p)) d.e_.emplace(p, m);
  return d;
}

Divisor Divisor::only(const PointSet& pts) const {
  Divisor d;
  for (const auto& [p, m] : e_)
    if (pts.count(p)) d.e_.emplace(p, m);
  return d;
}

Divisor& Divisor::add(const ClosedPoint& p, Mult m) {
  if (m == 0) return *this;
  auto [it, inserted] = e_.emplace(p, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) e_.erase(it);
  }
  return *this;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, m] : o.e_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, m] : o.e_) add(p, -m);
  return *this;
}

Divisor Divisor::operator-() const { return Divisor() - *this; }

Divisor operator*(Mult k, const Divisor& d) {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, m] : d.e_) r.e_.emplace(p, k * m);
  return r;
}

std::string Divisor::to_string() const {
  if (e_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : e_) {
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    out += std::to_string(m < 0 ? -m : m) + "*" + p.to_string();
  }
  return out;
}

bool leq(const Divisor& a, const Divisor& b) { return (b - a).is_effective(); }

OrderReport divisor_order(const Divisor& d1, const Divisor& d2) {
  return {d1.is_effective(), leq(d1, d2), d1 == d2, d1.support(), d1.reduced_part()};
}

Divisor min_divisor(const Divisor& d1, const Divisor& d2) {
  if (!d1.is_effective() || !d2.is_effective())
    throw Error(ErrorKind::NotEffective, "min_divisor needs effective divisors");
  Divisor e;
  for (const auto& [p, m] : d1.entries()) e.add(p, std::min(m, d2.at(p)));
  return e;
}

std::pair<Divisor, Divisor> canonical_split(const Divisor& d) {
  Divisor plus, minus;
  for (const auto& [p, m] : d.entries()) {
    if (m > 0)
      plus.add(p, m);
    else
      minus.add(p, -m);
  }
  return {plus, minus};
}

bool disjoint(const PointSet& a, const PointSet& b) {
  for (const auto& p : a)
    if (b.count(p)) return false;
  return true;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

CurveSpace CurveSpace::open(PointSet b) {
  if (b.empty()) throw Error(ErrorKind::SemanticError, "open curve space needs a nonempty boundary");
  return CurveSpace{std::move(b)};
}

std::string CurveSpace::to_string() const {
  if (boundary.empty()) return "P1";
  std::string s = "P1 minus {";
  bool first = true;
  for (const auto& p : boundary) {
    if (!first) s += ", ";
    s += p.to_string();
    first = false;
  }
  return s + "}";
}

}  // namespace modtriple
