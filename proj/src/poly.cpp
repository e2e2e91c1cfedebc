#include "modtriple/poly.hpp"

#include <algorithm>
#include <cctype>

#include "modtriple/error.hpp"

namespace modtriple {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::DegenerateInput, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(long c) {
  if (c != 0) c_.push_back(Rat(c));
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
  if (c == 0) return Poly();
  std::vector<Rat> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

const Rat& Poly::lc() const {
  if (c_.empty()) throw Error(ErrorKind::DegenerateInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / lc();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rat& x = a.c_[static_cast<size_t>(i)];
    const Rat& y = b.c_[static_cast<size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else if (mag.get_den() == 1) {
      out += rat_to_string(mag) + "*" + mono;
    } else {
      out += "(" + rat_to_string(mag) + ")*" + mono;
    }
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  const Rat inv = 1 / b.lc();
  std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1);
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    Rat t = r[static_cast<size_t>(k)] * inv;
    q[static_cast<size_t>(k - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= t * bc[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

std::pair<Rat, std::vector<Int>> to_primitive_integer(const Poly& p) {
  if (p.is_zero()) return {Rat(0), {}};
  Int l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(p.coeffs().size());
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int t = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    v.push_back(t);
  }
  if (v.back() < 0) g = -g;
  for (auto& t : v) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
  return {make_rat(g, l), std::move(v)};
}

Poly from_integer(const std::vector<Int>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const auto& t : c) v.emplace_back(t);
  return Poly(std::move(v));
}

namespace {

using IPoly = std::vector<Int>;

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int ideg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

Int icontent(const IPoly& a) {
  Int g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void idivexact(IPoly& a, const Int& d) {
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z
IPoly iprem(IPoly a, const IPoly& b) {
  const int db = ideg(b);
  const Int& lb = b.back();
  int e = ideg(a) - db + 1;
  while (ideg(a) >= db) {
    Int t = a.back();
    int shift = ideg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<size_t>(shift + j)] -= t * b[static_cast<size_t>(j)];
    itrim(a);
    --e;
  }
  if (e > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

Int ipow(const Int& b, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DegenerateInput, "gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IPoly x = to_primitive_integer(a).second;
  IPoly y = to_primitive_integer(b).second;
  if (ideg(x) < ideg(y)) std::swap(x, y);
  // primitive PRS
  while (!y.empty() && ideg(y) > 0) {
    IPoly r = iprem(x, y);
    if (!r.empty()) {
      Int c = icontent(r);
      idivexact(r, c);
    }
    x = std::move(y);
    y = std::move(r);
  }
  if (!y.empty()) return Poly(1L);
  return from_integer(x).monic();
}

std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "squarefree decomposition of zero");
  std::vector<std::pair<int, Poly>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  Poly fp = f.derivative();
  Poly g = poly_gcd(f, fp);
  Poly c = f / g;
  Poly d = fp / g - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly a = poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(i, a);
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

Poly FactoredPoly::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned>(m));
  return r;
}

Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  const int da = a.degree(), db = b.degree();
  if (da == 0) {
    Rat r = 1;
    for (int i = 0; i < db; ++i) r *= a.lc();
    return r;
  }
  if (db == 0) {
    Rat r = 1;
    for (int i = 0; i < da; ++i) r *= b.lc();
    return r;
  }
  auto [ca, A] = to_primitive_integer(a);
  auto [cb, B] = to_primitive_integer(b);
  Rat scale = 1;
  for (int i = 0; i < db; ++i) scale *= ca;
  for (int i = 0; i < da; ++i) scale *= cb;

  // subresultant PRS on the primitive parts
  Int s = 1;
  if (ideg(A) < ideg(B)) {
    std::swap(A, B);
    if (ideg(A) % 2 == 1 && ideg(B) % 2 == 1) s = -1;
  }
  Int g = 1, h = 1;
  for (;;) {
    const int delta = ideg(A) - ideg(B);
    if (ideg(A) % 2 == 1 && ideg(B) % 2 == 1) s = -s;
    IPoly R = iprem(A, B);
    A = std::move(B);
    Int div = g * ipow(h, delta);
    idivexact(R, div);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Int num = ipow(g, delta);
      Int den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.empty()) return Rat(0);
    if (ideg(B) > 0) continue;
    const int dA = ideg(A);
    Int num = ipow(B.back(), dA);
    Int den = ipow(h, dA - 1);
    Int hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return scale * Rat(s * hh);
  }
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (peek('+')) {
        ++i_;
        acc += term();
      } else if (peek('-')) {
        ++i_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        acc *= unary();
      } else if (peek('/')) {
        ++i_;
        size_t at = i_;
        Poly d = unary();
        if (d.is_zero() || d.degree() > 0) {
          i_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= 1 / d.lc();
      } else if (peek('x') || peek('(')) {
        acc *= unary();  // juxtaposition like 2x
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek('^')) {
      ++i_;
      skip();
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      if (i_ - start > 4) fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Poly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == 'x') {
      ++i_;
      return Poly::var();
    }
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Poly::constant(Rat(Int(std::string(s_.substr(start, i_ - start)))));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Rat parse_rat(std::string_view text) {
  Poly p = parse_poly(text);
  if (p.degree() > 0) throw Error(ErrorKind::ParseError, "expected a rational number, got '" + std::string(text) + "'");
  return p.coeff(0);
}

}  // namespace modtriple
