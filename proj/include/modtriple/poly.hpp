#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modtriple {

using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(const Int& num, const Int& den);

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(long c);  // NOLINT: integer constants convert implicitly
  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int k);
  static Poly var() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& lc() const;

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;
  Poly compose(const Poly& inner) const;  // this(inner(x))
  Poly pow(unsigned e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical order: degree first, then coefficients from the leading one down.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient part of divmod
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; throws DegenerateInput when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// (multiplicity, monic squarefree part), multiplicities strictly increasing.
std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& p);

struct FactoredPoly {
  Rat unit;
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
  Poly expand() const;
};

FactoredPoly factor(const Poly& p);
bool is_irreducible(const Poly& p);

Rat resultant(const Poly& a, const Poly& b);

// Splits p = content * primitive integer polynomial with positive leading coefficient.
std::pair<Rat, std::vector<Int>> to_primitive_integer(const Poly& p);
Poly from_integer(const std::vector<Int>& c);

// Text syntax: x, integers, a/b, + - * / ^ ( ). Throws Error(ParseError) with a column.
Poly parse_poly(std::string_view text);

std::string rat_to_string(const Rat& r);
Rat parse_rat(std::string_view text);

}  // namespace modtriple
