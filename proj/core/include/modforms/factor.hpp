#ifndef MODFORMS_FACTOR_HPP
#define MODFORMS_FACTOR_HPP

#include <modforms/intpoly.hpp>

#include <vector>

namespace modforms {

// True iff the reduction of monic f modulo the prime p is irreducible over
// F_p (of the full degree). A positive answer is a sufficient certificate
// of irreducibility over Q. Uses the Frobenius criterion:
//   x^{p^n} = x (mod f) and gcd(x^{p^{n/q}} - x, f) = 1 for primes q | n.
bool irreducible_mod_p(const IntPolynomial& f, long p);

// Complete factorization of a monic squarefree polynomial into monic
// irreducible factors over Z: distinct-degree + Cantor-Zassenhaus splitting
// modulo a suitable odd prime, quadratic Hensel lifting past twice the
// factor coefficient bound, then exhaustive subset recombination.
// Deterministic (fixed RNG seed); factors sorted by degree, then
// lexicographically. The product of the result equals f exactly.
std::vector<IntPolynomial> factor_monic_squarefree(const IntPolynomial& f);

// First `count` primes, 2, 3, 5, ...
std::vector<long> small_primes(int count);

} // namespace modforms

#endif
