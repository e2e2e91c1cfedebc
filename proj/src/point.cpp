#include <cctype>

#include "modtriple/curve.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

ClosedPoint ClosedPoint::rational(const Rat& a) {
  return ClosedPoint(Poly(std::vector<Rat>{-a, Rat(1)}));
}

ClosedPoint ClosedPoint::finite(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::SemanticError, "point polynomial must have positive degree");
  if (!is_irreducible(p))
    throw Error(ErrorKind::SemanticError, "point polynomial " + p.to_string() + " is reducible");
  return ClosedPoint(p.monic());
}

ClosedPoint ClosedPoint::trusted(Poly p) { return ClosedPoint(std::move(p)); }

Rat ClosedPoint::value() const {
  if (inf_ || poly_.degree() != 1) throw Error(ErrorKind::InvalidArgument, "not a finite rational point");
  return -poly_.coeff(0);
}

std::string ClosedPoint::to_string() const {
  if (inf_) return "P(inf)";
  if (poly_.degree() == 1) return "P(" + rat_to_string(value()) + ")";
  return "P(" + poly_.to_string() + ")";
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
  if (a.inf_ != b.inf_) return b.inf_;
  if (a.inf_) return false;
  return a.poly_ < b.poly_;
}

namespace {

std::string trim_copy(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void syntax(size_t col, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "column " + std::to_string(col + 1) + ": " + msg);
}

// parses P( ... ) starting at s[i] == 'P'; leaves i after the closing parenthesis
ClosedPoint point_at(std::string_view s, size_t& i) {
  if (i >= s.size() || s[i] != 'P') syntax(i, "expected 'P('");
  ++i;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != '(') syntax(i, "expected '(' after P");
  size_t open = i++;
  int depth = 1;
  size_t start = i;
  while (i < s.size() && depth > 0) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    ++i;
  }
  if (depth != 0) syntax(open, "unbalanced parenthesis in point literal");
  std::string inner = trim_copy(s.substr(start, i - 1 - start));
  if (inner == "inf") return ClosedPoint::infinity();
  Poly p;
  try {
    p = parse_poly(inner);
  } catch (const Error& e) {
    syntax(start, std::string("in point literal: ") + e.what());
  }
  if (p.is_zero() || p.degree() == 0) return ClosedPoint::rational(p.coeff(0));
  return ClosedPoint::finite(p);
}

}  // namespace

ClosedPoint parse_point(std::string_view text) {
  std::string s = trim_copy(text);
  size_t i = 0;
  ClosedPoint p = point_at(s, i);
  if (i != s.size()) syntax(i, "trailing characters after point literal");
  return p;
}

Divisor parse_divisor(std::string_view text) {
  std::string s = trim_copy(text);
  if (s == "0") return Divisor();
  if (s.empty()) syntax(0, "empty divisor literal");
  Divisor d;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    Mult sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      syntax(i, "expected '+' or '-'");
    }
    first = false;
    Mult k = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i - start > 15) syntax(start, "multiplicity too large");
      k = std::stoll(s.substr(start, i - start));
      skip();
      if (i >= s.size() || s[i] != '*') syntax(i, "expected '*' after multiplicity");
      ++i;
      skip();
    }
    ClosedPoint p = point_at(s, i);
    d.add(p, sign * k);
  }
  return d;
}

}  // namespace modtriple
