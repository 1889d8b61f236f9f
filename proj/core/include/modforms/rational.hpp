#ifndef MODFORMS_RATIONAL_HPP
#define MODFORMS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace modforms {

// GMP supplies the scalars. mpq_class keeps every value reduced to lowest
// terms with a positive denominator, which is exactly the Rational
// invariant this library relies on (zero is 0/1).
using Integer  = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// mpq_class's two-argument constructor stores the pair as-is; this helper
// restores the reduced/positive-denominator invariant for arbitrary input.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: base-10 "num/den" with "/1" suppressed.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// C(a, b) over the integers; 0 when b < 0 or b > a >= 0, and 1 when b = 0
// regardless of a (the bracket's n = 0 edge needs C(wt-1, 0) = 1 even at
// wt = 0).
inline Integer binomial(long a, long b) {
    if (b == 0) return 1;
    if (b < 0 || a < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace modforms

#endif
