#include "modtriple/curve.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

RationalMap RationalMap::constant(const ClosedPoint& c) {
  if (!c.is_rational()) throw Error(ErrorKind::SemanticError, "constant map needs a rational point, got " + c.to_string());
  RationalMap f;
  f.constant_ = c;
  return f;
}

RationalMap RationalMap::fraction(const Poly& num, const Poly& den) {
  if (num.is_zero() && den.is_zero()) throw Error(ErrorKind::DegenerateInput, "0/0 is not a map");
  if (den.is_zero()) return constant(ClosedPoint::infinity());
  Poly g = poly_gcd(num, den);
  Poly n = num / g, d = den / g;
  Rat s = 1 / d.lc();
  n *= s;
  d *= s;
  if (n.degree() <= 0 && d.degree() <= 0) return constant(ClosedPoint::rational(n.coeff(0)));
  RationalMap f;
  f.num_ = std::move(n);
  f.den_ = std::move(d);
  return f;
}

int RationalMap::degree() const {
  if (constant_) return 0;
  return std::max(num_.degree(), den_.degree());
}

bool RationalMap::is_identity() const { return !constant_ && num_ == Poly::var() && den_ == Poly(1L); }

std::string RationalMap::to_string() const {
  if (constant_) return "const " + constant_->to_string();
  if (den_ == Poly(1L)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool operator<(const RationalMap& a, const RationalMap& b) {
  if (a.is_constant() != b.is_constant()) return a.is_constant();
  if (a.is_constant()) return a.constant_value() < b.constant_value();
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

namespace {

// sum_k c_k N^k D^(m-k) for a polynomial c of degree <= m
Poly homogenized(const Poly& c, const Poly& N, const Poly& D, int m) {
  Poly acc;
  std::vector<Poly> npow{Poly(1L)}, dpow{Poly(1L)};
  for (int k = 1; k <= m; ++k) {
    npow.push_back(npow.back() * N);
    dpow.push_back(dpow.back() * D);
  }
  for (int k = 0; k <= c.degree(); ++k) {
    if (c.coeff(k) == 0) continue;
    acc += c.coeff(k) * (npow[static_cast<size_t>(k)] * dpow[static_cast<size_t>(m - k)]);
  }
  return acc;
}

}  // namespace

RationalMap compose_maps(const RationalMap& g, const RationalMap& f) {
  if (g.is_constant()) return g;
  if (f.is_constant()) return RationalMap::constant(point_image(g, f.constant_value()));
  const int m = g.degree();
  Poly top = homogenized(g.num(), f.num(), f.den(), m);
  Poly bottom = homogenized(g.den(), f.num(), f.den(), m);
  return RationalMap::fraction(top, bottom);
}

RationalMap inverse_map(const RationalMap& f) {
  if (f.degree() != 1) throw Error(ErrorKind::InvalidArgument, "only degree-one maps are inverted");
  Rat a = f.num().coeff(1), b = f.num().coeff(0), c = f.den().coeff(1), d = f.den().coeff(0);
  return RationalMap::fraction(Poly(std::vector<Rat>{-b, d}), Poly(std::vector<Rat>{a, -c}));
}

ClosedPoint point_image(const RationalMap& f, const ClosedPoint& p) {
  if (f.is_constant()) return f.constant_value();
  if (f.is_identity()) return p;
  const Poly& N = f.num();
  const Poly& D = f.den();
  if (p.is_infinity()) {
    if (N.degree() > D.degree()) return ClosedPoint::infinity();
    if (N.degree() < D.degree()) return ClosedPoint::rational(Rat(0));
    return ClosedPoint::rational(N.lc() / D.lc());
  }
  const Poly& q = p.poly();
  if ((D % q).is_zero()) return ClosedPoint::infinity();
  if (q.degree() == 1) {
    Rat t = p.value();
    return ClosedPoint::rational(N.eval(t) / D.eval(t));
  }
  // R(y) = Res_t(q(t), y D(t) - N(t)) has degree deg q in y; interpolate from deg q + 1 values
  const int d = q.degree();
  std::vector<Rat> ys, vals;
  for (int k = 0; k <= d; ++k) {
    Rat y(k);
    ys.push_back(y);
    vals.push_back(resultant(q, D * y - N));
  }
  Poly R;
  for (int i = 0; i <= d; ++i) {
    Poly basis(1L);
    Rat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis *= Poly(std::vector<Rat>{-ys[static_cast<size_t>(j)], Rat(1)});
      denom *= ys[static_cast<size_t>(i)] - ys[static_cast<size_t>(j)];
    }
    R += basis * (vals[static_cast<size_t>(i)] / denom);
  }
  FactoredPoly fr = factor(R);
  if (fr.factors.size() != 1)
    throw Error(ErrorKind::DegenerateInput, "norm polynomial is not a power of an irreducible");
  return ClosedPoint::trusted(fr.factors[0].first);
}

Divisor pullback_point(const RationalMap& f, const ClosedPoint& q) {
  if (f.is_constant()) throw Error(ErrorKind::DegenerateInput, "pullback along a constant map");
  if (f.is_identity()) return Divisor::point(q);
  const int m = f.degree();
  Poly H;
  int total;
  if (q.is_infinity()) {
    H = f.den();
    total = m;
  } else {
    H = homogenized(q.poly(), f.num(), f.den(), q.degree());
    total = m * q.degree();
  }
  Divisor d;
  if (H.degree() > 0) {
    for (const auto& [g, e] : factor(H).factors) d.add(ClosedPoint::trusted(g), e);
  }
  d.add(ClosedPoint::infinity(), total - std::max(H.degree(), 0));
  return d;
}

Divisor pullback_divisor(const RationalMap& f, const Divisor& d) {
  if (f.is_constant()) throw Error(ErrorKind::DegenerateInput, "pullback along a constant map");
  Divisor out;
  for (const auto& [q, m] : d.entries()) out += m * pullback_point(f, q);
  return out;
}

Divisor pushforward_divisor(const RationalMap& f, const Divisor& d) {
  if (f.is_constant()) throw Error(ErrorKind::DegenerateInput, "pushforward along a constant map");
  if (f.is_identity()) return d;
  Divisor out;
  for (const auto& [p, m] : d.entries()) {
    ClosedPoint q = point_image(f, p);
    out.add(q, m * (p.degree() / q.degree()));
  }
  return out;
}

Divisor principal_divisor(const RationalMap& f) {
  if (f.is_constant()) throw Error(ErrorKind::DegenerateInput, "principal divisor of a constant map");
  return pullback_point(f, ClosedPoint::rational(Rat(0))) - pullback_point(f, ClosedPoint::infinity());
}

Preimage preimage(const RationalMap& f, const PointSet& targets) {
  Preimage r;
  if (f.is_constant()) {
    r.everything = targets.count(f.constant_value()) > 0;
    return r;
  }
  for (const auto& q : targets) {
    const Divisor d = pullback_point(f, q);
    for (const auto& [p, m] : d.entries()) r.points.insert(p);
  }
  return r;
}

bool subset(const Preimage& a, const Preimage& b) {
  if (b.everything) return true;
  if (a.everything) return false;
  for (const auto& p : a.points)
    if (!b.points.count(p)) return false;
  return true;
}

}  // namespace modtriple
