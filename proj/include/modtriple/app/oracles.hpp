#pragma once

// Reference checks that avoid the library's own algorithms.

#include <vector>

#include "modtriple/poly.hpp"

namespace modtriple::oracle {

// Exhaustive irreducibility test over Q for degree 1..6: rational roots, factor-degree
// patterns modulo small primes (by trial division with every monic polynomial of degree
// <= 3), and Kronecker interpolation for the remaining quadratic or cubic factor candidates.
bool irreducible_upto6(const Poly& p);

// gcd over Q by the plain Euclidean algorithm, made monic
Poly euclid_gcd(Poly a, Poly b);

}  // namespace modtriple::oracle
