#include "modtriple/app/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace modtriple::oracle {
namespace {

// primitive integer coefficients, low first, positive leading coefficient
std::vector<Int> integer_coeffs(const Poly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Int(c.get_den()));
  std::vector<Int> out;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int v = Int(c.get_num()) * (l / Int(c.get_den()));
    out.push_back(v);
    g = gcd(g, v);
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// positive divisors by trial division
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_root(const std::vector<Int>& f) {
  if (f[0] == 0) return true;
  for (const auto& p : divisors(f[0]))
    for (const auto& q : divisors(f.back()))
      for (int s : {1, -1}) {
        // q^n f(s p / q) = sum f_i (s p)^i q^(n-i)
        Int acc = 0, pw = 1;
        size_t n = f.size() - 1;
        std::vector<Int> qp(n + 1, 1);
        for (size_t i = 1; i <= n; ++i) qp[i] = qp[i - 1] * q;
        for (size_t i = 0; i <= n; ++i) {
          acc += f[i] * pw * qp[n - i];
          pw *= s * p;
        }
        if (acc == 0) return true;
      }
  return false;
}

using ModPoly = std::vector<std::int64_t>;

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// true when monic b divides a; a is then replaced by the quotient
bool divide_out(ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.size() < b.size()) return false;
  const size_t db = b.size() - 1;
  ModPoly r = a;
  ModPoly q(a.size() - db, 0);
  for (size_t k = q.size(); k-- > 0;) {
    std::int64_t c = r[k + db];
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) r[k + j] = ((r[k + j] - c * b[j]) % p + p) % p;
  }
  mod_trim(r);
  if (!r.empty()) return false;
  mod_trim(q);
  a = q;
  return true;
}

// degrees of the irreducible factors of f mod p, found by trial division with every monic
// polynomial of degree 1..3 in increasing degree; whatever remains has no factor of degree <= 3
std::vector<int> factor_degrees_mod(const std::vector<Int>& f, std::int64_t p) {
  ModPoly a;
  for (const auto& c : f) {
    Int r = c % p;
    if (r < 0) r += p;
    a.push_back(r.get_si());
  }
  std::int64_t li = inv_mod(a.back(), p);
  for (auto& c : a) c = c * li % p;
  std::vector<int> degs;
  for (int d = 1; d <= 3 && static_cast<int>(a.size()) - 1 >= 2 * d; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      ModPoly b(d + 1, 0);
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        b[i] = v % p;
        v /= p;
      }
      b[d] = 1;
      while (static_cast<int>(a.size()) - 1 >= d && divide_out(a, b, p)) degs.push_back(d);
    }
  }
  if (a.size() > 1) degs.push_back(static_cast<int>(a.size()) - 1);
  return degs;
}

std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> s{0};
  for (int d : degs) {
    std::set<int> t = s;
    for (int v : s) t.insert(v + d);
    s = t;
  }
  return s;
}

// Kronecker: a factor of degree d takes values dividing f at d + 1 integer points
bool has_factor_of_degree(const std::vector<Int>& f, const Poly& fq, int d) {
  std::vector<Int> xs;
  std::vector<std::vector<Int>> cands;
  // prefer points where f has few divisors
  std::vector<std::pair<size_t, Int>> pts;
  for (long k = -12; k <= 12; ++k) pts.push_back({divisors(eval_int(f, Int(k))).size(), Int(k)});
  std::sort(pts.begin(), pts.end());
  for (int i = 0; i <= d; ++i) {
    xs.push_back(pts[i].second);
    std::vector<Int> c;
    for (const auto& v : divisors(eval_int(f, pts[i].second))) {
      c.push_back(v);
      c.push_back(-v);
    }
    cands.push_back(c);
  }
  const Int lead = f.back();
  // rows[i][k] = g[x_{i-k}, ..., x_i]; for integer g at integer nodes every entry is an integer
  std::vector<std::vector<Int>> rows(d + 1);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == d + 1) {
      const Int& top = rows[d][d];
      if (top == 0 || lead % top != 0) return false;
      Poly g = Poly::constant(Rat(rows[d][d]));
      for (int k = d - 1; k >= 0; --k)
        g = g * Poly(std::vector<Rat>{Rat(-xs[k]), Rat(1)}) + Poly::constant(Rat(rows[k][k]));
      return (fq % g).is_zero();
    }
    for (const auto& v : cands[i]) {
      if (i == 0 && v < 0) continue;  // sign normalization of the candidate
      std::vector<Int>& row = rows[i];
      row.assign(i + 1, Int(0));
      row[0] = v;
      bool ok = true;
      for (int k = 1; k <= i && ok; ++k) {
        Int num = row[k - 1] - rows[i - 1][k - 1];
        Int den = xs[i] - xs[i - k];
        if (num % den != 0) ok = false;
        else row[k] = num / den;
      }
      if (ok && rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool irreducible_upto6(const Poly& p) {
  int n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (n > 6) throw std::invalid_argument("oracle covers degree <= 6");
  std::vector<Int> f = integer_coeffs(p);
  if (has_rational_root(f)) return false;
  if (n <= 3) return true;

  std::set<int> possible;
  for (int d = 2; d <= n / 2; ++d) possible.insert(d);
  for (std::int64_t prime : {3, 5, 7, 11, 13}) {
    if (f.back() % prime == 0) continue;
    std::set<int> sums = subset_sums(factor_degrees_mod(f, prime));
    for (auto it = possible.begin(); it != possible.end();) it = sums.count(*it) ? std::next(it) : possible.erase(it);
  }
  Poly fq = from_integer(f);
  for (int d : possible)
    if (has_factor_of_degree(f, fq, d)) return false;
  return true;
}

Poly euclid_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace modtriple::oracle
