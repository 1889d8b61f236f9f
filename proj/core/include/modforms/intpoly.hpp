#ifndef MODFORMS_INTPOLY_HPP
#define MODFORMS_INTPOLY_HPP

#include <modforms/rational.hpp>

#include <string>
#include <vector>

namespace modforms {

// Dense polynomial over Z, constant term first. Normalized so the leading
// coefficient is nonzero unless the polynomial is zero (stored as {0}).
class IntPolynomial {
public:
    IntPolynomial() : c_{Integer(0)} {}
    explicit IntPolynomial(std::vector<Integer> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Integer c) { return IntPolynomial({std::move(c)}); }
    // x^n with unit coefficient
    static IntPolynomial monomial(int n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    const Integer& coeff(int i) const;             // 0 beyond the degree
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const { return c_.back(); }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string str() const;  // human form, x as the variable

private:
    std::vector<Integer> c_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
IntPolynomial operator-(const IntPolynomial& a);

IntPolynomial derivative(const IntPolynomial& f);

// gcd of all coefficients (nonnegative); 0 for the zero polynomial
Integer content(const IntPolynomial& f);
// f / content(f), sign-normalized so the leading coefficient is positive
IntPolynomial primitive_part(const IntPolynomial& f);

// Exact division test: when g divides f over Z writes the quotient and
// returns true, leaving q untouched otherwise.
bool try_exact_divide(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& q);

// Primitive gcd over Z[x] (computed via rational Euclid; both inputs
// nonzero). Sign-normalized with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

Integer evaluate(const IntPolynomial& f, const Integer& x);

} // namespace modforms

#endif
