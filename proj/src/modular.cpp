#include "modular.hpp"

#include <stdexcept>
#include <utility>

namespace modtriple::modp {

Coeff Field::inv(Coeff a) const {
  Coeff t = 0, nt = 1, r = p, nr = norm(a);
  while (nr != 0) {
    Coeff q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw std::logic_error("non-invertible residue");
  return norm(t);
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly reduce(const std::vector<mpz_class>& a, const Field& F) {
  MPoly r(a.size());
  mpz_class t;
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(F.p));
    r[i] = static_cast<Coeff>(t.get_si());
  }
  trim(r);
  return r;
}

MPoly add(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.norm(r[i] + b[i]);
  trim(r);
  return r;
}

MPoly sub(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.norm(r[i] - b[i]);
  trim(r);
  return r;
}

MPoly mul(const MPoly& a, const MPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + F.mul(a[i], b[j])) % F.p;
  }
  trim(r);
  return r;
}

void divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r, const Field& F) {
  if (b.empty()) throw std::logic_error("division by zero polynomial mod p");
  r = a;
  trim(r);
  const int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<size_t>(deg(r) - db) + 1, 0);
  const Coeff inv = F.inv(b.back());
  for (int k = deg(r); k >= db; --k) {
    Coeff t = F.mul(r[static_cast<size_t>(k)], inv);
    q[static_cast<size_t>(k - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      size_t idx = static_cast<size_t>(k - db + j);
      r[idx] = F.norm(r[idx] - F.mul(t, b[static_cast<size_t>(j)]));
    }
  }
  r.resize(static_cast<size_t>(db));
  trim(r);
  trim(q);
}

MPoly mod(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly q, r;
  divmod(a, b, q, r, F);
  return r;
}

MPoly monic(const MPoly& a, const Field& F) {
  if (a.empty()) return a;
  Coeff inv = F.inv(a.back());
  MPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
  return r;
}

MPoly gcd(MPoly a, MPoly b, const Field& F) {
  while (!b.empty()) {
    MPoly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

MPoly derivative(const MPoly& a, const Field& F) {
  if (a.size() <= 1) return {};
  MPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], F.norm(static_cast<Coeff>(i)));
  trim(d);
  return d;
}

MPoly powmod(MPoly base, const mpz_class& e, const MPoly& m, const Field& F) {
  MPoly result{1};
  base = mod(base, m, F);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base, F), m, F);
  }
  if (e == 0) result = mod(MPoly{1}, m, F);
  return result;
}

MPoly ext_gcd(const MPoly& a, const MPoly& b, MPoly& s, MPoly& t, const Field& F) {
  MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    MPoly q, r;
    divmod(r0, r1, q, r, F);
    MPoly s2 = sub(s0, mul(q, s1, F), F);
    MPoly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Coeff inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = s0;
  t = t0;
  return monic(r0, F);
}

namespace {

// (product of all irreducibles of degree d, d) pairs
std::vector<std::pair<MPoly, int>> distinct_degree(MPoly f, const Field& F) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = x;
  const mpz_class p(static_cast<long>(F.p));
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, F);
    MPoly g = gcd(f, sub(h, x, F), F);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      MPoly q, r;
      divmod(f, g, q, r, F);
      f = q;
      h = mod(h, f, F);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

void equal_degree(const MPoly& g, int d, const Field& F, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<Coeff> coin(0, F.p - 1);
  for (;;) {
    MPoly a(static_cast<size_t>(deg(g)));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = powmod(a, e, g, F);
    b = sub(b, MPoly{1}, F);
    MPoly h = gcd(g, b, F);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      MPoly q, r;
      divmod(g, h, q, r, F);
      equal_degree(h, d, F, rng, out);
      equal_degree(monic(q, F), d, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<MPoly> factor_squarefree(const MPoly& f, const Field& F, std::mt19937_64& rng) {
  std::vector<MPoly> out;
  for (const auto& [g, d] : distinct_degree(monic(f, F), F)) equal_degree(g, d, F, rng, out);
  return out;
}

int count_factors(const MPoly& f, const Field& F) {
  int n = 0;
  for (const auto& [g, d] : distinct_degree(monic(f, F), F)) n += deg(g) / d;
  return n;
}

}  // namespace modtriple::modp
