#include <modforms/intpoly.hpp>

#include <cassert>
#include <sstream>

namespace modforms {

namespace {

std::vector<Integer> trim(std::vector<Integer> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.emplace_back(0);
    return c;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(trim(std::move(coeffs))) {}

IntPolynomial IntPolynomial::monomial(int n) {
    assert(n >= 0);
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

const Integer& IntPolynomial::coeff(int i) const {
    static const Integer zero(0);
    assert(i >= 0);
    if (i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Integer mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.degree(), b.degree()) + 1, Integer(0));
    for (int i = 0; i <= a.degree(); ++i) c[i] += a.coeff(i);
    for (int i = 0; i <= b.degree(); ++i) c[i] += b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.degree(), b.degree()) + 1, Integer(0));
    for (int i = 0; i <= a.degree(); ++i) c[i] += a.coeff(i);
    for (int i = 0; i <= b.degree(); ++i) c[i] -= b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<Integer> c(a.degree() + b.degree() + 1, Integer(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
    std::vector<Integer> c(a.coeffs());
    for (auto& x : c) x *= s;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) { return Integer(-1) * a; }

IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() == 0) return IntPolynomial::zero();
    std::vector<Integer> c(f.degree());
    for (int i = 1; i <= f.degree(); ++i) c[i - 1] = Integer(i) * f.coeff(i);
    return IntPolynomial(std::move(c));
}

Integer content(const IntPolynomial& f) {
    Integer g(0);
    for (const auto& a : f.coeffs()) g = gcd(g, a);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    Integer g = content(f);
    if (f.leading() < 0) g = -g;
    std::vector<Integer> c(f.coeffs());
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
}

bool try_exact_divide(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& q) {
    assert(!g.is_zero());
    if (f.is_zero()) { q = IntPolynomial::zero(); return true; }
    if (f.degree() < g.degree()) return false;
    std::vector<Integer> rem(f.coeffs());
    std::vector<Integer> quot(f.degree() - g.degree() + 1, Integer(0));
    for (int i = f.degree() - g.degree(); i >= 0; --i) {
        Integer top = rem[i + g.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), g.leading().get_mpz_t())) return false;
        Integer c = top / g.leading();
        quot[i] = c;
        for (int j = 0; j <= g.degree(); ++j) rem[i + j] -= c * g.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    q = IntPolynomial(std::move(quot));
    return true;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    assert(!a.is_zero() && !b.is_zero());
    // Euclid over Q[x] on rational coefficient vectors, then the primitive
    // integer representative. Degrees here stay small (<= ~17).
    auto to_rat = [](const IntPolynomial& f) {
        std::vector<Rational> v(f.degree() + 1);
        for (int i = 0; i <= f.degree(); ++i) v[i] = f.coeff(i);
        return v;
    };
    auto deg = [](const std::vector<Rational>& v) { return static_cast<int>(v.size()) - 1; };
    auto trim_rat = [](std::vector<Rational>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    };
    std::vector<Rational> u = to_rat(a), v = to_rat(b);
    while (!(v.size() == 1 && v[0] == 0)) {
        // u mod v
        std::vector<Rational> r = u;
        while (static_cast<int>(r.size()) - 1 >= deg(v) && !(r.size() == 1 && r[0] == 0)) {
            Rational c = r.back() / v.back();
            int shift = deg(r) - deg(v);
            for (int j = 0; j <= deg(v); ++j) r[shift + j] -= c * v[j];
            trim_rat(r);
            if (r.size() == 1 && r[0] == 0) break;
        }
        u = std::move(v);
        v = std::move(r);
    }
    // clear denominators of u
    Integer den(1);
    for (const auto& q : u) den = lcm(den, q.get_den());
    std::vector<Integer> c(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        Rational scaled = u[i] * Rational(den);
        assert(scaled.get_den() == 1);
        c[i] = scaled.get_num();
    }
    return primitive_part(IntPolynomial(std::move(c)));
}

Integer evaluate(const IntPolynomial& f, const Integer& x) {
    Integer acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
    return acc;
}

} // namespace modforms
