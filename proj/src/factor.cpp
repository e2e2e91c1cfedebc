// Factorization over Q: squarefree split, then Zassenhaus on each primitive part
// (factor mod a good prime, lift by linear Hensel steps, recombine by subsets).

#include <algorithm>
#include <functional>
#include <numeric>

#include "modtriple/error.hpp"
#include "modtriple/poly.hpp"
#include "modular.hpp"

namespace modtriple {

namespace {

using IPoly = std::vector<Int>;
using modp::Field;
using modp::MPoly;

int ideg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly imul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  itrim(r);
  return r;
}

void imod(IPoly& a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  itrim(a);
}

void isymmetric(IPoly& a, const Int& m) {
  Int half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  itrim(a);
}

Int icontent(const IPoly& a) {
  Int g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IPoly iprimitive(IPoly a) {
  Int g = icontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// exact division over Z; false when g does not divide f
bool idiv_exact(const IPoly& f, const IPoly& g, IPoly& q) {
  IPoly r = f;
  const int dg = ideg(g);
  if (ideg(r) < dg) return false;
  q.assign(static_cast<size_t>(ideg(r) - dg) + 1, 0);
  Int t;
  while (!r.empty() && ideg(r) >= dg) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), g.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), g.back().get_mpz_t());
    int shift = ideg(r) - dg;
    q[static_cast<size_t>(shift)] = t;
    for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(shift + j)] -= t * g[static_cast<size_t>(j)];
    itrim(r);
  }
  return r.empty();
}

IPoly to_ipoly(const MPoly& a) {
  IPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

bool is_prime_small(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Lift monic factors g_i with lc^{-1} f = prod g_i (mod p) to the same identity mod p^k.
std::vector<IPoly> hensel_lift(const IPoly& f, const std::vector<MPoly>& gs, const Field& F, unsigned k, Int& modulus) {
  const size_t r = gs.size();
  Int p(static_cast<long>(F.p));
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), k);

  Int lcinv;
  mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  IPoly ft = f;
  for (auto& c : ft) c *= lcinv;
  imod(ft, modulus);

  // s_i with sum s_i * prod_{j != i} g_j = 1 mod p
  std::vector<MPoly> s(r);
  for (size_t i = 0; i < r; ++i) {
    MPoly others{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) others = modp::mul(others, gs[j], F);
    MPoly u, v;
    modp::ext_gcd(modp::mod(others, gs[i], F), gs[i], u, v, F);
    s[i] = modp::mod(u, gs[i], F);
  }

  std::vector<IPoly> lifted;
  for (const auto& g : gs) lifted.push_back(to_ipoly(g));

  Int pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Int next = pj * p;
    IPoly prod{Int(1)};
    for (const auto& g : lifted) {
      prod = imul(prod, g);
      imod(prod, next);
    }
    IPoly e = ft;
    e.resize(std::max(e.size(), prod.size()));
    for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    imod(e, next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    MPoly em = modp::reduce(e, F);
    if (!em.empty()) {
      for (size_t i = 0; i < r; ++i) {
        MPoly delta = modp::mod(modp::mul(em, s[i], F), gs[i], F);
        IPoly& g = lifted[i];
        for (size_t t = 0; t < delta.size(); ++t) g[t] += pj * Int(static_cast<long>(delta[t]));
      }
    }
    pj = next;
  }
  return lifted;
}

void for_each_subset(size_t n, size_t k, const std::function<bool(const std::vector<size_t>&)>& visit);

// Factors a primitive squarefree integer polynomial of degree >= 1.
std::vector<IPoly> zassenhaus(const IPoly& f) {
  const int n = ideg(f);
  if (n <= 1) return {f};

  IPoly fd(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) fd[static_cast<size_t>(i - 1)] = f[static_cast<size_t>(i)] * i;

  // choose among a handful of good primes the one with fewest modular factors
  long best_p = 0;
  int best_count = 0;
  int good = 0;
  for (long p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    Field F{p};
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    MPoly fm = modp::reduce(f, F);
    MPoly dm = modp::reduce(fd, F);
    if (modp::deg(modp::gcd(fm, dm, F)) != 0) continue;
    ++good;
    int c = modp::count_factors(fm, F);
    if (best_p == 0 || c < best_count) {
      best_p = p;
      best_count = c;
    }
    if (c == 1) break;
  }
  if (best_count == 1) return {f};

  Field F{best_p};
  std::mt19937_64 rng(0x5eed1234u + static_cast<unsigned>(n));
  std::vector<MPoly> mod_factors = modp::factor_squarefree(modp::reduce(f, F), F, rng);
  std::sort(mod_factors.begin(), mod_factors.end());

  // coefficient bound for lc(f)/lc(h) * h over factors h of f
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  unsigned k = 1;
  {
    Int pk = best_p;
    while (pk <= bound) {
      pk *= best_p;
      ++k;
    }
  }
  Int m;
  std::vector<IPoly> lifted = hensel_lift(f, mod_factors, F, k, m);

  std::vector<IPoly> found;
  IPoly cur = f;
  std::vector<size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  size_t s = 1;
  while (2 * s <= alive.size()) {
    bool hit = false;
    std::vector<size_t> chosen;
    const Int lc = cur.back();
    for_each_subset(alive.size(), s, [&](const std::vector<size_t>& idx) {
      IPoly g{lc};
      for (size_t i : idx) {
        g = imul(g, lifted[alive[i]]);
        imod(g, m);
      }
      isymmetric(g, m);
      if (g.empty()) return false;
      // cheap constant-term filter
      if (cur[0] != 0 && g[0] != 0 && !mpz_divisible_p(Int(lc * cur[0]).get_mpz_t(), g[0].get_mpz_t())) return false;
      IPoly h = iprimitive(g);
      IPoly q;
      if (!idiv_exact(cur, h, q)) return false;
      found.push_back(h);
      cur = q;
      chosen = idx;
      hit = true;
      return true;
    });
    if (hit) {
      std::vector<size_t> rest;
      for (size_t i = 0; i < alive.size(); ++i)
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) rest.push_back(alive[i]);
      alive = rest;
    } else {
      ++s;
    }
  }
  if (ideg(cur) > 0) found.push_back(iprimitive(cur));
  return found;
}

void for_each_subset(size_t n, size_t k, const std::function<bool(const std::vector<size_t>&)>& visit) {
  if (k > n) return;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(idx)) return;
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FactoredPoly factor(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "factor of zero polynomial");
  FactoredPoly out{p.lc(), {}};
  for (const auto& [mult, part] : squarefree_decomposition(p)) {
    if (part.degree() == 1) {
      out.factors.emplace_back(part, mult);
      continue;
    }
    IPoly ip = to_primitive_integer(part).second;
    for (const auto& g : zassenhaus(ip)) out.factors.emplace_back(from_integer(g).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace modtriple
