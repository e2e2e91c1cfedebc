#pragma once

// Polynomial arithmetic over Z/p (small word-size p) used by the factorizer.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace modtriple::modp {

using Coeff = std::int64_t;
using MPoly = std::vector<Coeff>;  // low degree first, trimmed

struct Field {
  Coeff p;
  Coeff norm(Coeff a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((static_cast<__int128>(a) * b) % p); }
  Coeff inv(Coeff a) const;
};

int deg(const MPoly& a);
void trim(MPoly& a);
MPoly reduce(const std::vector<mpz_class>& a, const Field& F);
MPoly add(const MPoly& a, const MPoly& b, const Field& F);
MPoly sub(const MPoly& a, const MPoly& b, const Field& F);
MPoly mul(const MPoly& a, const MPoly& b, const Field& F);
void divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r, const Field& F);
MPoly mod(const MPoly& a, const MPoly& b, const Field& F);
MPoly monic(const MPoly& a, const Field& F);
MPoly gcd(MPoly a, MPoly b, const Field& F);
MPoly derivative(const MPoly& a, const Field& F);
MPoly powmod(MPoly base, const mpz_class& e, const MPoly& m, const Field& F);
// s*a + t*b = g (monic gcd)
MPoly ext_gcd(const MPoly& a, const MPoly& b, MPoly& s, MPoly& t, const Field& F);

// Complete factorization of a monic squarefree polynomial into monic irreducibles (p odd).
std::vector<MPoly> factor_squarefree(const MPoly& f, const Field& F, std::mt19937_64& rng);
// Number of irreducible factors (distinct-degree counts only).
int count_factors(const MPoly& f, const Field& F);

}  // namespace modtriple::modp
