#ifndef MODFORMS_ARITH_HPP
#define MODFORMS_ARITH_HPP

#include <modforms/rational.hpp>

namespace modforms {

// Bernoulli number B_k by the recurrence
//   sum_{j=0}^{n} C(n+1, j) B_j = 0   (n >= 1),
// i.e. B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j.
// Convention: B_1 = -1/2 internally (and is returned for k = 1, documented
// for completeness); the library itself only ever consumes even indices.
// Odd k > 1 raises OddIndex rather than silently returning 0.
// Values are memoized; safe for concurrent callers.
Rational bernoulli(int k);

// sigma_power(n) = sum of d^power over divisors d of n, by trial division
// up to sqrt(n). n >= 1.
Integer sigma(unsigned power, long n);

} // namespace modforms

#endif
